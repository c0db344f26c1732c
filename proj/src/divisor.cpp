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

#include "jacplane/divisor.hpp"

#include <map>

#include "jacplane/univariate.hpp"

namespace jacplane {

namespace {

struct DegreeInfo {
    int degree;
    bool has_infinite;
};

int chart_colength(const Ideal& I) {
    auto d = quotient_dimension(I);
    require(d.has_value(), "divisor ideal is not zero-dimensional on the curve");
    return *d;
}

bool vanishes_at(const Ideal& I, const ProjectivePoint& p) {
    for (auto& g : I.generators()) {
        Scalar v = g.evaluate({{Var::X, p.x()}, {Var::Y, p.y()}, {Var::Z, p.z()}});
        if (!v.is_zero()) return false;
    }
    return true;
}

DegreeInfo compute_degree(const CurvePtr& curve, const Ideal& ideal, bool delta) {
    const Field f = curve->field();
    const Universe axy = Universe::affine_xy();
    const Universe ayz = Universe::chart_yz();

    if (!delta && curve->is_nodal()) {
        for (auto& nd : curve->nodes())
            require(!vanishes_at(ideal, nd.location),
                    "plain divisor ideal meets the node " + nd.location.to_string() +
                        "; use the adjoint (branch-tagged) form");
    }

    Ideal Az = ideal_sum(dehomogenize_ideal(ideal, Var::Z), Ideal(axy, f, {curve->affine_z()}));
    int z_col = Az.is_unit() ? 0 : chart_colength(Az);

    Ideal K = ideal_sum(dehomogenize_ideal(ideal, Var::X), Ideal(ayz, f, {curve->affine_x()}));
    int inf_col = 0;
    if (!K.is_unit()) {
        Ideal at_z0 = ideal_sum(K, Ideal(ayz, f, {Polynomial::variable(ayz, f, Var::Z)}));
        int kz = at_z0.is_unit() ? 0 : chart_colength(at_z0);
        if (kz > 0) {
            Ideal sat = ideal_saturation(K, Polynomial::variable(ayz, f, Var::Z));
            int total = chart_colength(K);
            int away = sat.is_unit() ? 0 : chart_colength(sat);
            inf_col = total - away;
        }
    }

    int degree = z_col + inf_col - (delta ? curve->node_count() : 0);
    check_internal(degree >= 0, "negative divisor degree");
    return {degree, inf_col > 0};
}

// ((x - a)^k, (y - b)^k, ...) layer generators of a point power ideal.
std::vector<Polynomial> point_power_gens(const Universe& u, Var v1, const Scalar& a, Var v2, const Scalar& b,
                                         int m) {
    Field f = a.field();
    Polynomial d1 = Polynomial::variable(u, f, v1) - Polynomial::constant(u, a);
    Polynomial d2 = Polynomial::variable(u, f, v2) - Polynomial::constant(u, b);
    std::vector<Polynomial> gens;
    for (int i = 0; i <= m; ++i) gens.push_back(d1.pow(i) * d2.pow(m - i));
    return gens;
}

// Affine ideal of curves with contact >= k with one node branch.
Ideal branch_contact_ideal(const CurvePtr& curve, std::size_t node_index, BranchSign sign, int k) {
    const Universe axy = Universe::affine_xy();
    const Field f = curve->field();
    const Node& nd = curve->nodes()[node_index];
    if (k <= 0) return Ideal::unit(axy, f);
    std::vector<Polynomial> gens =
        point_power_gens(axy, Var::X, nd.location.x(), Var::Y, nd.location.y(), k);
    const BranchSeries& br = nd.branch(sign);
    Var pu = br.parameter();
    Var pv = pu == Var::X ? Var::Y : Var::X;
    Scalar pu0 = pu == Var::X ? nd.location.x() : nd.location.y();
    Scalar pv0 = pu == Var::X ? nd.location.y() : nd.location.x();
    Polynomial du = Polynomial::variable(axy, f, pu) - Polynomial::constant(axy, pu0);
    Polynomial series = Polynomial::variable(axy, f, pv) - Polynomial::constant(axy, pv0);
    if (k >= 2) {
        auto coeffs = br.coefficients(k - 1);
        for (int j = 1; j <= k - 1; ++j) series = series - du.pow(j) * coeffs[j - 1];
    }
    gens.push_back(series);
    gens.push_back(curve->affine_z());
    return Ideal(axy, f, gens);
}

Ideal intersect_all(std::vector<Ideal> ideals, Universe u, Field f) {
    std::optional<Ideal> acc;
    for (auto& I : ideals) {
        if (I.is_unit()) continue;
        acc = acc ? ideal_intersection(*acc, I) : I;
    }
    return acc ? *acc : Ideal::unit(u, f);
}

void check_same_curve(const HomogeneousDivisorIdeal& a, const HomogeneousDivisorIdeal& b) {
    require(a.curve() == b.curve() || a.curve()->F() == b.curve()->F(), "curve mismatch");
}

bool is_curve_multiple(const CurvePtr& curve, const Polynomial& G) {
    return Ideal(G.universe(), G.field(), {curve->F()}).contains(G);
}

void check_oslash_pre(const CurvePtr& curve, const Polynomial& G, const HomogeneousDivisorIdeal& a) {
    require(G.is_homogeneous() && !G.is_zero(), "residual numerator must be homogeneous and nonzero");
    require(a.ideal().contains(G), "form does not dominate the divisor (G is outside the ideal)");
    require(!is_curve_multiple(curve, G), "form vanishes identically on the curve");
}

}  // namespace

HomogeneousDivisorIdeal HomogeneousDivisorIdeal::wrap_internal(const CurvePtr& curve, const Ideal& ideal,
                                                               bool delta, std::optional<int> expected_degree) {
    Ideal canon = ideal.reduced();
    DegreeInfo info = compute_degree(curve, canon, delta);
    if (expected_degree)
        check_internal(info.degree == *expected_degree,
                       "divisor degree bookkeeping mismatch: computed " + std::to_string(info.degree) +
                           ", expected " + std::to_string(*expected_degree));
    return HomogeneousDivisorIdeal(curve, std::move(canon), info.degree, delta, info.has_infinite);
}

DivisorSpec DivisorSpec::points(std::vector<DivisorEntry> entries) {
    DivisorSpec s;
    s.entries_ = std::move(entries);
    return s;
}

DivisorSpec DivisorSpec::raw(Ideal homogeneous_ideal, bool delta_included) {
    DivisorSpec s;
    s.raw_ = std::move(homogeneous_ideal);
    s.raw_delta_ = delta_included;
    return s;
}

HomogeneousDivisorIdeal HomogeneousDivisorIdeal::wrap(CurvePtr curve, const Ideal& ideal, bool delta_included) {
    check_universe(ideal.universe(), Universe::projective());
    require(ideal.field() == curve->field(), "field mismatch");
    require(ideal.has_homogeneous_generators(), "divisor ideal must be homogeneous");
    require(ideal.contains(curve->F()), "divisor ideal does not contain the curve polynomial");
    return HomogeneousDivisorIdeal::wrap_internal(curve, ideal, delta_included, std::nullopt);
}

HomogeneousDivisorIdeal unit_divisor_ideal(const CurvePtr& curve) {
    return HomogeneousDivisorIdeal(curve, Ideal::unit(Universe::projective(), curve->field()), 0, false, false);
}

HomogeneousDivisorIdeal empty_divisor_ideal(const CurvePtr& curve) {
    if (!curve->is_nodal()) return unit_divisor_ideal(curve);
    return HomogeneousDivisorIdeal::wrap_internal(curve, curve->adjoint_ideal(), true, 0);
}

Ideal adjoint_ideal(const CurvePtr& curve) { return curve->adjoint_ideal(); }

HomogeneousDivisorIdeal ideal_of_divisor(const CurvePtr& curve, const DivisorSpec& spec,
                                         std::optional<bool> with_delta_opt) {
    const Field f = curve->field();
    const Universe axy = Universe::affine_xy();
    const Universe ayz = Universe::chart_yz();

    if (spec.is_raw()) {
        return HomogeneousDivisorIdeal::wrap(curve, spec.raw_ideal(), spec.raw_delta());
    }

    const bool with_delta = with_delta_opt.value_or(curve->is_nodal()) && curve->is_nodal();

    int expected = 0;
    std::map<std::size_t, std::pair<int, int>> node_mults;  // node -> (m+, m-)
    std::vector<Ideal> z_parts, x_parts;

    // merge repeated points first: multiplicities of equal points add
    std::vector<DivisorEntry> merged;
    for (auto& e : spec.entries()) {
        require(e.multiplicity >= 1, "divisor multiplicities must be positive");
        require(e.point.field() == f, "divisor point field mismatch");
        bool found = false;
        for (auto& m : merged) {
            if (m.point == e.point && m.branch == e.branch) {
                m.multiplicity += e.multiplicity;
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(e);
    }

    for (auto& e : merged) {
        Scalar onC =
            curve->F().evaluate({{Var::X, e.point.x()}, {Var::Y, e.point.y()}, {Var::Z, e.point.z()}});
        require(onC.is_zero(), "divisor point " + e.point.to_string() + " does not lie on the curve");
        expected += e.multiplicity;

        auto at_node = curve->node_at(e.point);
        if (e.branch) {
            require(at_node.has_value() && *at_node == e.branch->first,
                    "branch tag does not match a declared node at " + e.point.to_string());
            auto& slot = node_mults[e.branch->first];
            (e.branch->second == BranchSign::plus ? slot.first : slot.second) += e.multiplicity;
            continue;
        }
        require(!at_node.has_value(),
                "point " + e.point.to_string() + " is a node; tag it with a branch sign");

        if (e.point.is_finite()) {
            auto gens = point_power_gens(axy, Var::X, e.point.x(), Var::Y, e.point.y(), e.multiplicity);
            gens.push_back(curve->affine_z());
            z_parts.push_back(Ideal(axy, f, gens));
        } else {
            // x = 1 chart coordinates (y, z) = (y0, 0)
            auto gens = point_power_gens(ayz, Var::Y, e.point.y(), Var::Z, Scalar::zero(f), e.multiplicity);
            gens.push_back(curve->affine_x());
            x_parts.push_back(Ideal(ayz, f, gens));
        }
    }

    if (with_delta) {
        for (std::size_t i = 0; i < curve->nodes().size(); ++i) {
            auto it = node_mults.find(i);
            int mp = it == node_mults.end() ? 0 : it->second.first;
            int mm = it == node_mults.end() ? 0 : it->second.second;
            z_parts.push_back(branch_contact_ideal(curve, i, BranchSign::plus, mp + 1));
            z_parts.push_back(branch_contact_ideal(curve, i, BranchSign::minus, mm + 1));
        }
    } else {
        // A polynomial through a node meets both branches, so no polynomial
        // ideal carries a bare branch divisor; branch entries need the
        // adjoint form.
        require(node_mults.empty(), "branch divisors require the adjoint (delta) form");
    }

    Ideal z_affine = intersect_all(std::move(z_parts), axy, f);
    Ideal x_affine = intersect_all(std::move(x_parts), ayz, f);

    std::optional<Ideal> H;
    if (!z_affine.is_unit()) H = homogenize_ideal(z_affine, Var::Z);
    if (!x_affine.is_unit()) {
        Ideal Hx = homogenize_ideal(x_affine, Var::X);
        H = H ? ideal_intersection(*H, Hx) : Hx;
    }
    if (!H) return with_delta ? empty_divisor_ideal(curve) : unit_divisor_ideal(curve);
    return HomogeneousDivisorIdeal::wrap_internal(curve, *H, with_delta, expected);
}

HomogeneousDivisorIdeal odot(const HomogeneousDivisorIdeal& a, const HomogeneousDivisorIdeal& b) {
    check_same_curve(a, b);
    const CurvePtr& curve = a.curve();
    const Field f = curve->field();
    require(!(a.delta_included() && b.delta_included()),
            "both operands carry the node divisor; use odot_delta");
    const bool delta_out = a.delta_included() || b.delta_included();

    if (a.ideal().is_unit()) return b;
    if (b.ideal().is_unit()) return a;

    Ideal Pz = ideal_sum(ideal_product(a.affine_z(), b.affine_z()),
                         Ideal(Universe::affine_xy(), f, {curve->affine_z()}));
    Ideal H = homogenize_ideal(Pz, Var::Z);
    if (a.has_infinite_support() || b.has_infinite_support()) {
        Ideal Px = ideal_sum(ideal_product(a.affine_x(), b.affine_x()),
                             Ideal(Universe::chart_yz(), f, {curve->affine_x()}));
        H = ideal_intersection(H, homogenize_ideal(Px, Var::X));
    }
    return HomogeneousDivisorIdeal::wrap_internal(curve, H, delta_out, a.degree_on_curve() + b.degree_on_curve());
}

HomogeneousDivisorIdeal oslash(const Polynomial& G, const HomogeneousDivisorIdeal& a) {
    const CurvePtr& curve = a.curve();
    const Field f = curve->field();
    require(!(curve->is_nodal() && a.delta_included()), "adjoint operand on a nodal curve; use oslash_delta");
    check_oslash_pre(curve, G, a);
    const int m = G.degree();

    Ideal numerator_z(Universe::affine_xy(), f, {G.dehomogenize(Var::Z), curve->affine_z()});
    Ideal Qz = ideal_quotient(numerator_z, a.affine_z());
    Ideal H = homogenize_ideal(Qz, Var::Z);
    if (vanishes_at_infinity(curve, G) || a.has_infinite_support()) {
        Ideal numerator_x(Universe::chart_yz(), f, {G.dehomogenize(Var::X), curve->affine_x()});
        Ideal Qx = ideal_quotient(numerator_x, a.affine_x());
        H = ideal_intersection(H, homogenize_ideal(Qx, Var::X));
    }
    return HomogeneousDivisorIdeal::wrap_internal(curve, H, false, m * curve->degree() - a.degree_on_curve());
}

HomogeneousDivisorIdeal odot_delta(const HomogeneousDivisorIdeal& a, const HomogeneousDivisorIdeal& b) {
    check_same_curve(a, b);
    const CurvePtr& curve = a.curve();
    if (!curve->is_nodal()) return odot(a, b);
    require(a.delta_included() && b.delta_included(), "odot_delta needs adjoint operands");
    const Field f = curve->field();

    Ideal Pz = ideal_sum(ideal_product(a.affine_z(), b.affine_z()),
                         Ideal(Universe::affine_xy(), f, {curve->affine_z()}));
    Ideal Qz = ideal_quotient(Pz, curve->adjoint_affine_z());
    Ideal H = homogenize_ideal(Qz, Var::Z);
    if (a.has_infinite_support() || b.has_infinite_support()) {
        Ideal Px = ideal_sum(ideal_product(a.affine_x(), b.affine_x()),
                             Ideal(Universe::chart_yz(), f, {curve->affine_x()}));
        Ideal Qx = ideal_quotient(Px, curve->adjoint_affine_x());
        H = ideal_intersection(H, homogenize_ideal(Qx, Var::X));
    }
    return HomogeneousDivisorIdeal::wrap_internal(curve, H, true, a.degree_on_curve() + b.degree_on_curve());
}

HomogeneousDivisorIdeal oslash_delta(const Polynomial& G, const HomogeneousDivisorIdeal& a) {
    const CurvePtr& curve = a.curve();
    if (!curve->is_nodal()) return oslash(G, a);
    require(a.delta_included(), "oslash_delta needs an adjoint operand");
    check_oslash_pre(curve, G, a);
    const Field f = curve->field();
    const int m = G.degree();

    std::vector<Polynomial> nz;
    Polynomial Gz = G.dehomogenize(Var::Z);
    for (auto& h : curve->adjoint_affine_z().generators()) nz.push_back(Gz * h);
    nz.push_back(curve->affine_z());
    Ideal Qz = ideal_quotient(Ideal(Universe::affine_xy(), f, nz), a.affine_z());
    Ideal H = homogenize_ideal(Qz, Var::Z);

    if (vanishes_at_infinity(curve, G) || a.has_infinite_support()) {
        std::vector<Polynomial> nx;
        Polynomial Gx = G.dehomogenize(Var::X);
        for (auto& h : curve->adjoint_affine_x().generators()) nx.push_back(Gx * h);
        nx.push_back(curve->affine_x());
        Ideal Qx = ideal_quotient(Ideal(Universe::chart_yz(), f, nx), a.affine_x());
        H = ideal_intersection(H, homogenize_ideal(Qx, Var::X));
    }
    return HomogeneousDivisorIdeal::wrap_internal(curve, H, true,
                         m * curve->degree() - 2 * curve->node_count() - a.degree_on_curve());
}

int divisor_degree(const HomogeneousDivisorIdeal& I) {
    return compute_degree(I.curve(), I.ideal(), I.delta_included()).degree;
}

bool vanishes_at_infinity(const CurvePtr& curve, const Polynomial& G) {
    const Field f = curve->field();
    std::vector<Term> top;
    for (auto& t : G.terms())
        if (t.mono.exponent(Var::Z) == 0) top.push_back(t);
    if (top.empty()) return true;  // z divides G
    Universe uy({Var::Y});
    Polynomial g0 = Polynomial(Universe::affine_xy(), f, top).dehomogenize(Var::X);
    Polynomial r = curve->infinity_form().dehomogenize(Var::X);
    Polynomial g0y(uy, f, g0.terms());
    Polynomial ry(uy, f, r.terms());
    if (g0y.is_constant()) return false;
    Polynomial gcd = uv_gcd(ry, g0y, Var::Y);
    return !gcd.is_constant();
}

}  // namespace jacplane
