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

#ifndef JACPLANE_CURVE_HPP
#define JACPLANE_CURVE_HPP

#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "jacplane/ideal.hpp"

namespace jacplane {

/// A projective point with coordinates in K, normalized so that z = 1 when
/// finite and x = 1 when at infinity. (0:1:0) is never representable on the
/// curves this library accepts.
class ProjectivePoint {
   public:
    ProjectivePoint(Scalar x, Scalar y, Scalar z);

    const Scalar& x() const { return x_; }
    const Scalar& y() const { return y_; }
    const Scalar& z() const { return z_; }
    const Field& field() const { return x_.field(); }

    bool is_finite() const { return !z_.is_zero(); }

    bool operator==(const ProjectivePoint& o) const { return x_ == o.x_ && y_ == o.y_ && z_ == o.z_; }
    bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }

    std::string to_string() const;

   private:
    Scalar x_, y_, z_;
};

enum class BranchSign { plus, minus };

/// One local branch of a simple double point, as a truncated Taylor series
/// of the dependent chart variable in the other. Coefficients extend lazily
/// and are cached behind a lock, so concurrent reads are safe.
class BranchSeries {
   public:
    /// `parameter` is the variable the series runs in: X means
    /// y - y0 = a1 (x - x0) + a2 (x - x0)^2 + ..., Y the transposed form.
    BranchSeries(Var parameter, Polynomial local_curve, Scalar slope, Scalar derivative_unit);

    Var parameter() const { return param_; }
    const Scalar& slope() const { return slope_; }

    /// Coefficients a_1 ... a_k.
    std::vector<Scalar> coefficients(int k) const;

   private:
    void extend(int k) const;

    Var param_;
    Polynomial local_;      // curve shifted to the node, quadratic part and up
    Scalar slope_;          // a_1
    Scalar dunit_;          // nonzero linearization coefficient of the recursion
    mutable std::mutex mu_;
    mutable std::vector<Scalar> coeffs_;  // a_1, a_2, ...
};

struct Node {
    ProjectivePoint location;
    std::shared_ptr<BranchSeries> plus;
    std::shared_ptr<BranchSeries> minus;

    const BranchSeries& branch(BranchSign s) const { return s == BranchSign::plus ? *plus : *minus; }
};

/// An immutable validated plane curve: homogeneous F of degree n >= 3 with
/// at most simple double points, all declared, genus at least one, a base
/// point on the curve, and (0:1:0) off the curve.
class PlaneCurve {
   public:
    static std::shared_ptr<const PlaneCurve> validate(const Polynomial& F,
                                                      const std::vector<ProjectivePoint>& declared_nodes,
                                                      const ProjectivePoint& base_point,
                                                      std::optional<std::pair<int, int>> fixed_monomial = {});

    const Polynomial& F() const { return F_; }
    const Polynomial& affine_z() const { return Fz_; }  // F(x, y, 1) in {x,y}
    const Polynomial& affine_x() const { return Fx_; }  // F(1, y, z) in {y,z}
    const Field& field() const { return F_.field(); }

    int degree() const { return n_; }
    int genus() const { return genus_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    bool is_nodal() const { return !nodes_.empty(); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const ProjectivePoint& base_point() const { return p0_; }
    std::pair<int, int> fixed_monomial() const { return fixed_; }

    /// Index of the node at the given location, if any.
    std::optional<std::size_t> node_at(const ProjectivePoint& p) const;

    /// Number of point conditions an m-curve interpolation absorbs.
    int b_m(int m) const;

    /// Minimal m >= n-2 whose interpolation space covers both reduction
    /// steps: b_m >= max(s_plus, s_minus + g) + d.
    int choose_m(int s_plus, int s_minus) const;

    /// Degree-m monomials not divisible by the fixed monomial (m >= n).
    std::set<Monomial> restricted_system(int m) const;

    /// Homogeneous ideal of curves whose intersection divisor contains
    /// r P0; the unit ideal for r = 0.
    Ideal base_contact_ideal(int r) const;

    /// Branch series coefficients a_1 .. a_{k-1} of a node branch.
    std::vector<Scalar> branch_coefficients(std::size_t node_index, BranchSign sign, int k) const;

    /// Homogeneous ideal of adjoint curves (through every node); unit ideal
    /// on smooth curves.
    const Ideal& adjoint_ideal() const { return adjoint_h_; }
    const Ideal& adjoint_affine_z() const { return adjoint_z_; }
    const Ideal& adjoint_affine_x() const { return adjoint_x_; }

    /// Intersection multiplicity of the line z = 0 with the curve is n; the
    /// points at infinity are the roots of this binary form at x = 1.
    const Polynomial& infinity_form() const { return inf_form_; }

   private:
    PlaneCurve(Polynomial F, Polynomial Fz, Polynomial Fx, int n, int genus, std::vector<Node> nodes,
               ProjectivePoint p0, std::pair<int, int> fixed, Ideal adj_h, Ideal adj_z, Ideal adj_x,
               Polynomial inf_form);

    Polynomial F_, Fz_, Fx_;
    int n_;
    int genus_;
    std::vector<Node> nodes_;
    ProjectivePoint p0_;
    std::pair<int, int> fixed_;
    Ideal adjoint_h_, adjoint_z_, adjoint_x_;
    Polynomial inf_form_;
};

using CurvePtr = std::shared_ptr<const PlaneCurve>;

}  // namespace jacplane

#endif
