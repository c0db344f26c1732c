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

#ifndef JACPLANE_JACOBIAN_HPP
#define JACPLANE_JACOBIAN_HPP

#include "jacplane/divisor.hpp"

namespace jacplane {

/// Canonical representative of a divisor class: the ideal of the reduced
/// divisor's positive part S_1 + ... + S_t (adjoint form on nodal curves),
/// with t <= g, plus the contact defect alpha of the producing reduction.
class JacobianElement {
   public:
    JacobianElement(CurvePtr curve, HomogeneousDivisorIdeal ired, int t, int alpha)
        : curve_(std::move(curve)), ired_(std::move(ired)), t_(t), alpha_(alpha) {}

    static JacobianElement identity(const CurvePtr& curve) {
        return JacobianElement(curve, empty_divisor_ideal(curve), 0, 0);
    }

    const CurvePtr& curve() const { return curve_; }
    const HomogeneousDivisorIdeal& ideal() const { return ired_; }
    int t() const { return t_; }
    int alpha() const { return alpha_; }
    bool is_identity() const { return t_ == 0; }

   private:
    CurvePtr curve_;
    HomogeneousDivisorIdeal ired_;
    int t_;
    int alpha_;
};

/// Intermediates of a reduction run, exposed for inspection and testing.
struct ReductionTrace {
    int m = 0;
    int first_contact_order = 0;   // b_m - s_plus - d
    int second_contact_order = 0;  // the r of the final interpolation
    std::vector<std::pair<std::string, Ideal>> stages;  // named ideals, in pipeline order
    std::optional<Polynomial> G, Gprime;
};

/// Reduce the class of D+ - D- - (deg D+ - deg D-) P0 to its unique reduced
/// representative. On nodal curves both inputs must be in adjoint form.
JacobianElement reduce(const CurvePtr& curve, const HomogeneousDivisorIdeal& Iplus,
                       const HomogeneousDivisorIdeal& Iminus, ReductionTrace* trace = nullptr);

/// Divisor-level entry: multiplicities at P0 are stripped first (they cancel
/// against the -t P0 bookkeeping and would skew the contact search), then the
/// divisor ideals are built and reduced.
JacobianElement reduce_divisors(const CurvePtr& curve, const DivisorSpec& plus, const DivisorSpec& minus,
                                ReductionTrace* trace = nullptr);

/// Group operations on canonical representatives.
JacobianElement add(const JacobianElement& a, const JacobianElement& b);
JacobianElement neg(const JacobianElement& a);
bool equal(const JacobianElement& a, const JacobianElement& b);
JacobianElement scalar_mul(long k, const JacobianElement& a);

/// Reducedness test: the degree-(n-3) slice of the divisor ideal has
/// dimension at most g - t.
bool verify_reduced(const CurvePtr& curve, const HomogeneousDivisorIdeal& I, int t);

}  // namespace jacplane

#endif
