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

#include "jacplane/curve.hpp"

#include <algorithm>

namespace jacplane {

namespace {

// Truncated power series in one formal variable: s[i] is the coefficient of
// u^(i+1) (no constant term).
using Series = std::vector<Scalar>;

Series series_mul(const Series& a, const Series& b, int cap, const Field& f) {
    // (sum a_i u^(i+1)) * (sum b_j u^(j+1)) truncated above u^cap
    Series r(cap, Scalar::zero(f));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::size_t k = i + j + 1;  // power - 1
            if (k >= static_cast<std::size_t>(cap)) break;
            r[k] = r[k] + a[i] * b[j];
        }
    }
    return r;
}

// Coefficients of G(u, s(u)) up to u^cap, where G is bivariate in (pu, pv)
// and s has no constant term. Index i holds the u^i coefficient.
std::vector<Scalar> substitute_series(const Polynomial& G, Var pu, Var pv, const Series& s, int cap) {
    const Field f = G.field();
    std::vector<Scalar> out(cap + 1, Scalar::zero(f));
    // powers of s, lazily extended
    std::vector<Series> spow = {Series{}};  // spow[1] = s, etc.
    spow.push_back(s);
    auto spower = [&](int b) -> const Series& {
        while (static_cast<int>(spow.size()) <= b) spow.push_back(series_mul(spow.back(), s, cap, f));
        return spow[b];
    };
    for (auto& t : G.terms()) {
        int a = t.mono.exponent(pu);
        int b = t.mono.exponent(pv);
        if (b == 0) {
            if (a <= cap) out[a] = out[a] + t.coeff;
            continue;
        }
        const Series& sb = spower(b);  // coefficient of u^(i+1)
        for (std::size_t i = 0; i < sb.size(); ++i) {
            int power = a + static_cast<int>(i) + 1;
            if (power > cap) break;
            out[power] = out[power] + t.coeff * sb[i];
        }
    }
    return out;
}

}  // namespace

ProjectivePoint::ProjectivePoint(Scalar x, Scalar y, Scalar z) : x_(x), y_(y), z_(z) {
    require(x.field() == y.field() && y.field() == z.field(), "mixed fields in point coordinates");
    require(!(x.is_zero() && y.is_zero() && z.is_zero()), "(0:0:0) is not a projective point");
    if (!z_.is_zero()) {
        Scalar inv = z_.inverse();
        x_ = x_ * inv;
        y_ = y_ * inv;
        z_ = Scalar::one(z_.field());
    } else {
        require(!x_.is_zero(), "points at infinity must have x != 0 ((0:1:0) is excluded)");
        Scalar inv = x_.inverse();
        y_ = y_ * inv;
        z_ = Scalar::zero(x_.field());
        x_ = Scalar::one(x_.field());
    }
}

std::string ProjectivePoint::to_string() const {
    return "(" + x_.to_string() + "," + y_.to_string() + "," + z_.to_string() + ")";
}

BranchSeries::BranchSeries(Var parameter, Polynomial local_curve, Scalar slope, Scalar derivative_unit)
    : param_(parameter), local_(std::move(local_curve)), slope_(slope), dunit_(derivative_unit) {
    coeffs_.push_back(slope_);
}

std::vector<Scalar> BranchSeries::coefficients(int k) const {
    require(k >= 1, "need at least one branch coefficient");
    extend(k);
    std::lock_guard<std::mutex> lock(mu_);
    return std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + k);
}

void BranchSeries::extend(int k) const {
    std::lock_guard<std::mutex> lock(mu_);
    const Var pu = param_;
    const Var pv = pu == Var::X ? Var::Y : Var::X;
    while (static_cast<int>(coeffs_.size()) < k) {
        int next = static_cast<int>(coeffs_.size()) + 1;  // computing a_next
        // residual of the series so far, up to u^(next+1)
        auto vals = substitute_series(local_, pu, pv, coeffs_, next + 1);
        for (int i = 0; i <= next; ++i)
            check_internal(vals[i].is_zero(), "branch series residual fails below truncation order");
        coeffs_.push_back(-(vals[next + 1] / dunit_));
    }
}

PlaneCurve::PlaneCurve(Polynomial F, Polynomial Fz, Polynomial Fx, int n, int genus, std::vector<Node> nodes,
                       ProjectivePoint p0, std::pair<int, int> fixed, Ideal adj_h, Ideal adj_z, Ideal adj_x,
                       Polynomial inf_form)
    : F_(std::move(F)),
      Fz_(std::move(Fz)),
      Fx_(std::move(Fx)),
      n_(n),
      genus_(genus),
      nodes_(std::move(nodes)),
      p0_(std::move(p0)),
      fixed_(fixed),
      adjoint_h_(std::move(adj_h)),
      adjoint_z_(std::move(adj_z)),
      adjoint_x_(std::move(adj_x)),
      inf_form_(std::move(inf_form)) {}

std::shared_ptr<const PlaneCurve> PlaneCurve::validate(const Polynomial& F_in,
                                                       const std::vector<ProjectivePoint>& declared_nodes,
                                                       const ProjectivePoint& base_point,
                                                       std::optional<std::pair<int, int>> fixed_monomial) {
    const Universe pu = Universe::projective();
    const Field f = F_in.field();
    check_universe(F_in.universe(), pu);
    require(!F_in.is_zero() && F_in.is_homogeneous(), "curve polynomial must be homogeneous and nonzero");
    const int n = F_in.degree();
    require(n >= 3, "curve degree must be at least 3");
    Polynomial F = F_in.normalized(default_grlex(pu));

    // chart setup needs (0:1:0) off the curve
    Scalar at010 = F.evaluate({{Var::X, Scalar::zero(f)}, {Var::Y, Scalar::one(f)}, {Var::Z, Scalar::zero(f)}});
    require(!at010.is_zero(), "(0:1:0) lies on the curve; substitute coordinates first");

    Polynomial Fz = F.dehomogenize(Var::Z);
    Polynomial Fx = F.dehomogenize(Var::X);

    const int d = static_cast<int>(declared_nodes.size());
    const int genus = (n - 1) * (n - 2) / 2 - d;
    require(genus >= 1, "genus must be at least one");

    // base point on the curve, not a node
    require(base_point.field() == f, "base point field mismatch");
    Scalar p0val = F.evaluate({{Var::X, base_point.x()}, {Var::Y, base_point.y()}, {Var::Z, base_point.z()}});
    require(p0val.is_zero(), "base point does not lie on the curve");
    for (auto& nd : declared_nodes) require(!(nd == base_point), "base point must not be a node");

    // per-node analysis: shift, tangent cone, branch series
    std::vector<Node> nodes;
    const Universe axy = Universe::affine_xy();
    for (auto& loc : declared_nodes) {
        require(loc.field() == f, "node field mismatch");
        require(loc.is_finite(), "declared nodes must be finite");
        for (auto& other : nodes)
            require(!(other.location == loc), "node declared twice");

        // local form: F(x0 + x, y0 + y)
        Polynomial local = Fz.substitute(Var::X, Polynomial::variable(axy, f, Var::X) +
                                                     Polynomial::constant(axy, loc.x()))
                               .substitute(Var::Y, Polynomial::variable(axy, f, Var::Y) +
                                                       Polynomial::constant(axy, loc.y()));
        require(local.coefficient(Monomial::one()).is_zero(), "declared node does not lie on the curve");
        require(local.coefficient(Monomial::var(Var::X)).is_zero() &&
                    local.coefficient(Monomial::var(Var::Y)).is_zero(),
                "declared node " + loc.to_string() + " is a smooth point");
        Scalar q20 = local.coefficient(Monomial::var(Var::X, 2));
        Scalar q11 = local.coefficient(Monomial::var(Var::X) * Monomial::var(Var::Y));
        Scalar q02 = local.coefficient(Monomial::var(Var::Y, 2));
        Scalar four(f, 4);
        Scalar disc = q11 * q11 - four * q20 * q02;
        require(!disc.is_zero(), "declared node " + loc.to_string() + " is not a simple double point");

        // tangent slopes: roots of q02 a^2 + q11 a + q20 (branch y = a x + ...)
        std::vector<Scalar> slopes;
        bool vertical = false;
        if (q02.is_zero()) {
            vertical = true;  // one branch is x = b(y), tangent x = x0
            slopes.push_back(-(q20 / q11));
        } else {
            auto root = disc.sqrt();
            require(root.has_value(), "node tangents are not rational over " + f.to_string());
            Scalar two(f, 2);
            slopes.push_back(((-q11) + *root) / (two * q02));
            slopes.push_back(((-q11) - *root) / (two * q02));
            std::sort(slopes.begin(), slopes.end(), [](const Scalar& a, const Scalar& b) {
                if (a.field().is_prime_field()) return a.residue() < b.residue();
                return a.rational() < b.rational();
            });
        }

        auto x_branch = [&](const Scalar& slope) {
            // y = slope*x + ...: linearization unit d/da Q(1, a) = q11 + 2 q02 a
            Scalar unit = q11 + Scalar(f, 2) * q02 * slope;
            check_internal(!unit.is_zero(), "degenerate branch recursion");
            return std::make_shared<BranchSeries>(Var::X, local, slope, unit);
        };
        auto y_branch = [&]() {
            // vertical tangent: x = b2 y^2 + ...; unit d/db Q(b, 1) at b = 0 is q11
            return std::make_shared<BranchSeries>(Var::Y, local, Scalar::zero(f), q11);
        };

        Node node{loc, nullptr, nullptr};
        if (vertical) {
            node.plus = x_branch(slopes[0]);
            node.minus = y_branch();
        } else {
            node.plus = x_branch(slopes[0]);
            node.minus = x_branch(slopes[1]);
        }
        nodes.push_back(std::move(node));
    }

    // the full singular scheme must be exactly the declared nodes
    Polynomial Fdx = F.derivative(Var::X), Fdy = F.derivative(Var::Y), Fdz = F.derivative(Var::Z);
    {
        std::vector<Polynomial> gens_z;
        for (auto& g : {F, Fdx, Fdy, Fdz}) gens_z.push_back(g.dehomogenize(Var::Z));
        Ideal sing_z(Universe::affine_xy(), f, gens_z);
        auto dim_z = quotient_dimension(sing_z);
        require(dim_z.has_value(), "singular locus is not zero-dimensional");
        require(*dim_z == d, "undeclared singularities: singular scheme has degree " + std::to_string(*dim_z) +
                                 ", declared " + std::to_string(d));

        std::vector<Polynomial> gens_x;
        for (auto& g : {F, Fdx, Fdy, Fdz}) gens_x.push_back(g.dehomogenize(Var::X));
        gens_x.push_back(Polynomial::variable(Universe::chart_yz(), f, Var::Z));
        auto dim_inf = quotient_dimension(Ideal(Universe::chart_yz(), f, gens_x));
        require(dim_inf.has_value() && *dim_inf == 0, "singular point at infinity");
    }

    // fixed monomial for the restricted systems
    std::pair<int, int> fixed;
    if (fixed_monomial) {
        fixed = *fixed_monomial;
        Monomial fm = Monomial::var(Var::X, fixed.first) * Monomial::var(Var::Y, fixed.second) *
                      Monomial::var(Var::Z, n - fixed.first - fixed.second);
        require(fixed.first >= 0 && fixed.second >= 0 && fixed.first + fixed.second <= n,
                "fixed monomial exponents out of range");
        require(!F.coefficient(fm).is_zero(), "fixed monomial has zero coefficient in F");
    } else {
        Term lt = F.leading_term(default_grlex(pu));
        fixed = {lt.mono.exponent(Var::X), lt.mono.exponent(Var::Y)};
    }

    // adjoint ideal: forms through every node
    Ideal adj_h = Ideal::unit(pu, f);
    for (auto& nd : nodes) {
        Polynomial gx = Polynomial::variable(pu, f, Var::X) -
                        Polynomial::variable(pu, f, Var::Z) * nd.location.x();
        Polynomial gy = Polynomial::variable(pu, f, Var::Y) -
                        Polynomial::variable(pu, f, Var::Z) * nd.location.y();
        Ideal pt(pu, f, {gx, gy});
        adj_h = adj_h.is_unit() ? pt : ideal_intersection(adj_h, pt);
    }
    Ideal adj_z = dehomogenize_ideal(adj_h, Var::Z);
    Ideal adj_x = dehomogenize_ideal(adj_h, Var::X);

    Polynomial inf_form = F.dehomogenize(Var::Z);
    // keep only the top-degree part (the binary form F(x, y, 0))
    {
        std::vector<Term> top;
        for (auto& t : F.terms())
            if (t.mono.exponent(Var::Z) == 0) top.push_back(t);
        inf_form = Polynomial(Universe::affine_xy(), f, top);
    }

    return std::shared_ptr<const PlaneCurve>(new PlaneCurve(F, Fz, Fx, n, genus, std::move(nodes), base_point,
                                                            fixed, adj_h, adj_z, adj_x, inf_form));
}

std::optional<std::size_t> PlaneCurve::node_at(const ProjectivePoint& p) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].location == p) return i;
    return std::nullopt;
}

int PlaneCurve::b_m(int m) const {
    require(m >= 1, "b_m needs m >= 1");
    if (m < n_) return m * (m + 3) / 2;
    return m * n_ - genus_ - node_count();
}

int PlaneCurve::choose_m(int s_plus, int s_minus) const {
    require(s_plus >= 0 && s_minus >= 0, "divisor degrees must be nonnegative");
    int need = std::max(s_plus, s_minus + genus_) + node_count();
    for (int m = std::max(1, n_ - 2);; ++m) {
        if (b_m(m) >= need) return m;
    }
}

std::set<Monomial> PlaneCurve::restricted_system(int m) const {
    require(m >= n_, "restricted system only applies for m >= n");
    Monomial fixed = Monomial::var(Var::X, fixed_.first) * Monomial::var(Var::Y, fixed_.second) *
                     Monomial::var(Var::Z, n_ - fixed_.first - fixed_.second);
    std::set<Monomial> out;
    for (auto& mono : monomials_of_degree(Universe::projective(), m))
        if (!fixed.divides(mono)) out.insert(mono);
    return out;
}

Ideal PlaneCurve::base_contact_ideal(int r) const {
    require(r >= 0, "contact order must be nonnegative");
    const Universe pu = Universe::projective();
    const Field f = field();
    if (r == 0) return Ideal::unit(pu, f);
    if (p0_.is_finite()) {
        const Universe axy = Universe::affine_xy();
        Polynomial dx = Polynomial::variable(axy, f, Var::X) - Polynomial::constant(axy, p0_.x());
        Polynomial dy = Polynomial::variable(axy, f, Var::Y) - Polynomial::constant(axy, p0_.y());
        std::vector<Polynomial> gens;
        for (int i = 0; i <= r; ++i) gens.push_back(dx.pow(i) * dy.pow(r - i));
        gens.push_back(Fz_);
        return homogenize_ideal(Ideal(axy, f, gens), Var::Z);
    }
    const Universe ayz = Universe::chart_yz();
    Polynomial dy = Polynomial::variable(ayz, f, Var::Y) - Polynomial::constant(ayz, p0_.y());
    Polynomial dz = Polynomial::variable(ayz, f, Var::Z);  // z - 0
    std::vector<Polynomial> gens;
    for (int i = 0; i <= r; ++i) gens.push_back(dy.pow(i) * dz.pow(r - i));
    gens.push_back(Fx_);
    return homogenize_ideal(Ideal(ayz, f, gens), Var::X);
}

std::vector<Scalar> PlaneCurve::branch_coefficients(std::size_t node_index, BranchSign sign, int k) const {
    require(node_index < nodes_.size(), "node index out of range");
    require(k >= 2, "branch coefficients are requested to order k - 1 >= 1");
    return nodes_[node_index].branch(sign).coefficients(k - 1);
}

}  // namespace jacplane
