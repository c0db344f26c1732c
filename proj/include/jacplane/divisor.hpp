// Copyright 2026 The jacplane authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JACPLANE_DIVISOR_HPP
#define JACPLANE_DIVISOR_HPP

#include "jacplane/curve.hpp"

namespace jacplane {

/// One entry of an effective divisor: a point with multiplicity, branch
/// tagged when the point is a node of the curve.
struct DivisorEntry {
    ProjectivePoint point;
    int multiplicity = 1;
    std::optional<std::pair<std::size_t, BranchSign>> branch;  // node index + side
};

/// An effective divisor: a point list, or a raw homogeneous ideal the caller
/// asserts to be a divisor ideal (its points may live in extensions).
class DivisorSpec {
   public:
    static DivisorSpec points(std::vector<DivisorEntry> entries);
    static DivisorSpec raw(Ideal homogeneous_ideal, bool delta_included);

    bool is_raw() const { return raw_.has_value(); }
    const std::vector<DivisorEntry>& entries() const { return entries_; }
    const Ideal& raw_ideal() const { return *raw_; }
    bool raw_delta() const { return raw_delta_; }

   private:
    std::vector<DivisorEntry> entries_;
    std::optional<Ideal> raw_;
    bool raw_delta_ = false;
};

/// The homogeneous ideal of all curves whose intersection divisor dominates
/// an effective divisor (plus the node divisor when delta_included). Kept in
/// canonical form: generators are the reduced graded-lex basis.
class HomogeneousDivisorIdeal {
   public:
    const CurvePtr& curve() const { return curve_; }
    const Ideal& ideal() const { return ideal_; }
    /// Degree of the represented divisor (the node divisor excluded).
    int degree_on_curve() const { return degree_; }
    bool delta_included() const { return delta_; }
    bool has_infinite_support() const { return has_infinite_; }

    Ideal affine_z() const { return dehomogenize_ideal(ideal_, Var::Z); }
    Ideal affine_x() const { return dehomogenize_ideal(ideal_, Var::X); }

    bool equals(const HomogeneousDivisorIdeal& o) const {
        return delta_ == o.delta_ && ideal_.equals(o.ideal_);
    }

    /// Wrap a homogeneous ideal, recomputing degree and support layout.
    /// Checks containment of F and zero-dimensionality.
    static HomogeneousDivisorIdeal wrap(CurvePtr curve, const Ideal& ideal, bool delta_included);

   private:
    friend HomogeneousDivisorIdeal unit_divisor_ideal(const CurvePtr&);
    friend HomogeneousDivisorIdeal empty_divisor_ideal(const CurvePtr&);
    friend HomogeneousDivisorIdeal ideal_of_divisor(const CurvePtr&, const DivisorSpec&, std::optional<bool>);
    friend HomogeneousDivisorIdeal odot(const HomogeneousDivisorIdeal&, const HomogeneousDivisorIdeal&);
    friend HomogeneousDivisorIdeal oslash(const Polynomial&, const HomogeneousDivisorIdeal&);
    friend HomogeneousDivisorIdeal odot_delta(const HomogeneousDivisorIdeal&, const HomogeneousDivisorIdeal&);
    friend HomogeneousDivisorIdeal oslash_delta(const Polynomial&, const HomogeneousDivisorIdeal&);

    HomogeneousDivisorIdeal(CurvePtr curve, Ideal ideal, int degree, bool delta, bool has_inf)
        : curve_(std::move(curve)), ideal_(std::move(ideal)), degree_(degree), delta_(delta),
          has_infinite_(has_inf) {}

    static HomogeneousDivisorIdeal wrap_internal(const CurvePtr& curve, const Ideal& ideal, bool delta,
                                                 std::optional<int> expected_degree);

    CurvePtr curve_;
    Ideal ideal_;
    int degree_;
    bool delta_;
    bool has_infinite_;
};

/// The empty divisor in plain form (the unit ideal).
HomogeneousDivisorIdeal unit_divisor_ideal(const CurvePtr& curve);

/// The empty divisor in the form the reduction pipeline uses: the adjoint
/// ideal on nodal curves, the unit ideal on smooth ones.
HomogeneousDivisorIdeal empty_divisor_ideal(const CurvePtr& curve);

/// Build the divisor ideal of an effective divisor. with_delta defaults to
/// "curve is nodal", matching the reduction pipeline's convention.
HomogeneousDivisorIdeal ideal_of_divisor(const CurvePtr& curve, const DivisorSpec& spec,
                                         std::optional<bool> with_delta = std::nullopt);

/// Ideal-level divisor addition (two-chart product). At most one operand may
/// carry the node divisor; the result inherits it.
HomogeneousDivisorIdeal odot(const HomogeneousDivisorIdeal& a, const HomogeneousDivisorIdeal& b);

/// Residual of a principal divisor: the ideal of (G) - D for G in the ideal
/// of D. G must not be a multiple of F.
HomogeneousDivisorIdeal oslash(const Polynomial& G, const HomogeneousDivisorIdeal& a);

/// Nodal variants twisted by the adjoint ideal. On smooth curves they
/// coincide with odot/oslash.
HomogeneousDivisorIdeal odot_delta(const HomogeneousDivisorIdeal& a, const HomogeneousDivisorIdeal& b);
HomogeneousDivisorIdeal oslash_delta(const Polynomial& G, const HomogeneousDivisorIdeal& a);

/// Homogeneous ideal of adjoint curves (through every node).
Ideal adjoint_ideal(const CurvePtr& curve);

/// Degree of the divisor an ideal represents, via chart-wise colengths (the
/// adjoint contribution removed when delta_included).
int divisor_degree(const HomogeneousDivisorIdeal& I);

/// True if the form G vanishes somewhere on the curve's intersection with
/// the line z = 0.
bool vanishes_at_infinity(const CurvePtr& curve, const Polynomial& G);

}  // namespace jacplane

#endif
