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

#include "jacplane/jacobian.hpp"

namespace jacplane {

namespace {

// Canonical pick from a degree-m slice: smallest leading monomial first,
// skipping multiples of F (possible only without the restricted system).
std::optional<Polynomial> pick_form(const CurvePtr& curve, const Ideal& ideal, int m,
                                    const std::optional<std::set<Monomial>>& restricted) {
    auto ord = default_grlex(Universe::projective());
    auto piece = graded_piece(ideal, m, ord, restricted);
    Ideal curve_only(Universe::projective(), curve->field(), {curve->F()});
    for (auto it = piece.rbegin(); it != piece.rend(); ++it) {
        if (!curve_only.contains(*it)) return *it;
    }
    return std::nullopt;
}

HomogeneousDivisorIdeal with_contact(const CurvePtr& curve, const HomogeneousDivisorIdeal& B, int r) {
    if (r <= 0) return B;
    Ideal cut = ideal_intersection(B.ideal(), curve->base_contact_ideal(r));
    return HomogeneousDivisorIdeal::wrap(curve, cut, B.delta_included());
}

}  // namespace

JacobianElement reduce(const CurvePtr& curve, const HomogeneousDivisorIdeal& Iplus,
                       const HomogeneousDivisorIdeal& Iminus, ReductionTrace* trace) {
    const bool nodal = curve->is_nodal();
    require(Iplus.curve()->F() == curve->F() && Iminus.curve()->F() == curve->F(), "curve mismatch");
    require(Iplus.delta_included() == nodal && Iminus.delta_included() == nodal,
            nodal ? "nodal reduction requires adjoint-form divisor ideals"
                  : "smooth reduction requires plain divisor ideals");

    const int g = curve->genus();
    const int d = curve->node_count();
    const int n = curve->degree();
    const int s_plus = Iplus.degree_on_curve();
    const int s_minus = Iminus.degree_on_curve();

    const int m = curve->choose_m(s_plus, s_minus);
    const int bm = curve->b_m(m);
    std::optional<std::set<Monomial>> restricted;
    if (m >= n) restricted = curve->restricted_system(m);

    // First interpolation: an m-curve through D+ (and the nodes) with
    // (b_m - s+ - d)-fold contact at P0; its residual has degree g.
    const int r1 = bm - s_plus - d;
    HomogeneousDivisorIdeal contact1 =
        HomogeneousDivisorIdeal::wrap(curve, curve->base_contact_ideal(r1), false);
    HomogeneousDivisorIdeal A = odot(Iplus, contact1);
    auto G = pick_form(curve, A.ideal(), m, restricted);
    check_internal(G.has_value(), "empty interpolation space in the first reduction step");
    HomogeneousDivisorIdeal J = nodal ? oslash_delta(*G, A) : oslash(*G, A);
    check_internal(J.degree_on_curve() == g, "first residual does not have degree g");

    if (trace) {
        trace->m = m;
        trace->first_contact_order = r1;
        trace->stages.emplace_back("first-contact", contact1.ideal());
        trace->stages.emplace_back("first-interpolation", A.ideal());
        trace->G = *G;
        trace->stages.emplace_back("residual", J.ideal());
    }

    // Second interpolation through the residual and D-, with maximal
    // additional contact at P0. The residual may itself meet P0 (it does
    // whenever the class is close to zero), so the search runs until the
    // degree-m slice dies; Bezout caps the contact at mn.
    HomogeneousDivisorIdeal B = nodal ? odot_delta(J, Iminus) : odot(J, Iminus);
    const int r0 = bm - s_minus - d - g;
    check_internal(r0 >= 0, "contact order went negative");

    HomogeneousDivisorIdeal best = with_contact(curve, B, r0);
    auto bestG = pick_form(curve, best.ideal(), m, restricted);
    check_internal(bestG.has_value(), "empty interpolation space in the second reduction step");
    int r_final = r0;
    for (int r = r0 + 1; r <= m * n; ++r) {
        HomogeneousDivisorIdeal cand = with_contact(curve, B, r);
        auto Gc = pick_form(curve, cand.ideal(), m, restricted);
        if (!Gc.has_value()) break;
        best = cand;
        bestG = Gc;
        r_final = r;
    }

    HomogeneousDivisorIdeal Ired = nodal ? oslash_delta(*bestG, best) : oslash(*bestG, best);
    const int t = Ired.degree_on_curve();
    check_internal(t <= g, "reduced divisor degree exceeds the genus");
    const int alpha = g - t;  // contact defect
    check_internal(verify_reduced(curve, Ired, t), "reduction output fails the reducedness criterion");

    if (trace) {
        trace->second_contact_order = r_final;
        trace->stages.emplace_back("final-contact", curve->base_contact_ideal(r_final));
        trace->stages.emplace_back("second-interpolation", best.ideal());
        trace->Gprime = *bestG;
        trace->stages.emplace_back("reduced", Ired.ideal());
    }
    return JacobianElement(curve, Ired, t, alpha);
}

JacobianElement reduce_divisors(const CurvePtr& curve, const DivisorSpec& plus, const DivisorSpec& minus,
                                ReductionTrace* trace) {
    auto strip = [&](const DivisorSpec& s) -> DivisorSpec {
        if (s.is_raw()) return s;
        std::vector<DivisorEntry> kept;
        for (auto& e : s.entries())
            if (!(e.point == curve->base_point())) kept.push_back(e);
        return DivisorSpec::points(kept);
    };
    HomogeneousDivisorIdeal Ip = ideal_of_divisor(curve, strip(plus));
    HomogeneousDivisorIdeal Im = ideal_of_divisor(curve, strip(minus));
    return reduce(curve, Ip, Im, trace);
}

JacobianElement add(const JacobianElement& a, const JacobianElement& b) {
    require(a.curve()->F() == b.curve()->F(), "curve mismatch");
    const CurvePtr& curve = a.curve();
    HomogeneousDivisorIdeal sum = curve->is_nodal() ? odot_delta(a.ideal(), b.ideal())
                                                    : odot(a.ideal(), b.ideal());
    return reduce(curve, sum, empty_divisor_ideal(curve));
}

JacobianElement neg(const JacobianElement& a) {
    const CurvePtr& curve = a.curve();
    return reduce(curve, empty_divisor_ideal(curve), a.ideal());
}

bool equal(const JacobianElement& a, const JacobianElement& b) {
    require(a.curve()->F() == b.curve()->F(), "curve mismatch");
    return a.t() == b.t() && a.ideal().equals(b.ideal());
}

JacobianElement scalar_mul(long k, const JacobianElement& a) {
    const CurvePtr& curve = a.curve();
    if (k == 0) return JacobianElement::identity(curve);
    if (k < 0) return scalar_mul(-k, neg(a));
    JacobianElement acc = JacobianElement::identity(curve);
    JacobianElement base = a;
    while (k) {
        if (k & 1) acc = add(acc, base);
        k >>= 1;
        if (k) base = add(base, base);
    }
    return acc;
}

bool verify_reduced(const CurvePtr& curve, const HomogeneousDivisorIdeal& I, int t) {
    require(t <= curve->genus(), "t exceeds the genus");
    const int m = curve->degree() - 3;
    if (m < 0) return true;
    std::size_t dim;
    if (I.ideal().is_unit()) {
        dim = monomials_of_degree(Universe::projective(), m).size();
    } else {
        dim = graded_piece(I.ideal(), m, default_grlex(Universe::projective())).size();
    }
    return static_cast<int>(dim) <= curve->genus() - t;
}

}  // namespace jacplane
