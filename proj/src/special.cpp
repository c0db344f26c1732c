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

#include "jacplane/special.hpp"

#include <functional>

#include "jacplane/univariate.hpp"

namespace jacplane {

namespace {

const Universe kXY = Universe::affine_xy();

void check_h(const Polynomial& h, int expected_gcd_with) {
    require(is_univariate_in(h, Var::X), "h must be univariate in x");
    require(!h.is_zero() && h.degree_in(Var::X) >= 2, "h must have degree at least 2");
    // distinct roots over the closure
    Polynomial dh = h.derivative(Var::X);
    require(!dh.is_zero() && uv_gcd(h, dh, Var::X).is_constant(), "h must have distinct roots");
    if (expected_gcd_with > 1) {
        int n = h.degree_in(Var::X);
        int a = n, b = expected_gcd_with;
        while (b) {
            int r = a % b;
            a = b;
            b = r;
        }
        require(a == 1, "exponent and degree of h must be coprime");
    }
}

Ideal with_equation(const Ideal& I, const Polynomial& eq) {
    return ideal_sum(I, Ideal(I.universe(), I.field(), {eq}));
}

void check_affine_divisor_ideal(const Ideal& I, const Polynomial& eq) {
    check_universe(I.universe(), kXY);
    require(!I.is_zero_ideal(), "divisor ideal must be nonzero");
    auto dim = quotient_dimension(with_equation(I, eq));
    require(dim.has_value(), "divisor ideal is not zero-dimensional on the curve");
}

int divisor_degree_affine(const Ideal& I, const Polynomial& eq) {
    Ideal J = with_equation(I, eq);
    if (J.is_unit()) return 0;
    return quotient_dimension(J).value();
}

}  // namespace

HyperellipticCurve HyperellipticCurve::make(const Polynomial& h) {
    check_universe(h.universe(), kXY);
    require(h.field().characteristic() != 2, "hyperelliptic arithmetic needs characteristic different from 2");
    check_h(h, 2);
    int n = h.degree_in(Var::X);
    require(n % 2 == 1 && n >= 3, "h must have odd degree 2g+1");
    int g = (n - 1) / 2;
    Polynomial y2 = Polynomial::monomial(kXY, Monomial::var(Var::Y, 2), Scalar::one(h.field()));
    MonomialOrder ord = MonomialOrder::weighted({Var::Y, Var::X}, {2 * g + 1, 2});
    return HyperellipticCurve(g, h, y2 - h, ord);
}

SuperellipticCurve SuperellipticCurve::make(int m, const Polynomial& h) {
    check_universe(h.universe(), kXY);
    require(m >= 2, "superelliptic exponent must be at least 2");
    const auto p = h.field().characteristic();
    require(p == 0 || static_cast<std::uint64_t>(m) % p != 0, "characteristic divides the exponent");
    check_h(h, m);
    int n = h.degree_in(Var::X);
    require((m - 1) * (n - 1) % 2 == 0, "inconsistent superelliptic data");
    Polynomial ym = Polynomial::monomial(kXY, Monomial::var(Var::Y, m), Scalar::one(h.field()));
    MonomialOrder ord = MonomialOrder::weighted({Var::Y, Var::X}, {n, m});
    return SuperellipticCurve(m, h, ym - h, ord);
}

SuperellipticCurve SuperellipticCurve::picard(const Polynomial& h) {
    require(h.degree_in(Var::X) == 4, "Picard curves need a quartic h");
    require(h.field().characteristic() != 3, "Picard arithmetic needs characteristic different from 3");
    return make(3, h);
}

MumfordPair mumford_identity(const Field& f) {
    return {Polynomial::constant(kXY, Scalar::one(f)), Polynomial::zero(kXY, f)};
}

bool mumford_valid(const HyperellipticCurve& curve, const MumfordPair& m) {
    if (m.u.is_zero() || !is_univariate_in(m.u, Var::X) || !is_univariate_in(m.v, Var::X)) return false;
    if (!uv_leading(m.u, Var::X).is_one()) return false;
    if (!m.v.is_zero() && m.v.degree_in(Var::X) >= m.u.degree_in(Var::X) && !m.u.is_constant()) return false;
    Polynomial r = uv_mod(m.v * m.v - curve.h(), m.u, Var::X);
    return r.is_zero();
}

Ideal mumford_to_ideal(const MumfordPair& m) {
    Field f = m.u.field();
    Polynomial y = Polynomial::variable(kXY, f, Var::Y);
    return Ideal(kXY, f, {m.u, m.v - y});
}

MumfordPair ideal_to_mumford(const HyperellipticCurve& curve, const Ideal& I) {
    const Field f = curve.field();
    Ideal J = with_equation(I, curve.equation());
    if (J.is_unit()) return mumford_identity(f);
    auto lexYX = MonomialOrder::lex({Var::Y, Var::X});
    const auto& gb = J.groebner_basis(lexYX);
    require(gb.size() == 2, "ideal is not in semireduced shape");
    require(is_univariate_in(gb[0], Var::X), "ideal is not in semireduced shape");
    require(gb[1].degree_in(Var::Y) == 1, "ideal is not in semireduced shape");
    Polynomial u = uv_monic(gb[0], Var::X);
    // second generator c*y + w(x) with constant c
    Scalar c = Scalar::zero(f);
    Polynomial w = Polynomial::zero(kXY, f);
    for (auto& t : gb[1].terms()) {
        if (t.mono.exponent(Var::Y) == 1) {
            require(t.mono.exponent(Var::X) == 0, "ideal is not in semireduced shape");
            c = t.coeff;
        } else {
            w = w + Polynomial::monomial(kXY, t.mono, t.coeff);
        }
    }
    check_internal(!c.is_zero(), "degenerate shape generator");
    Polynomial v = uv_mod(w * (-(c.inverse())), u, Var::X);
    MumfordPair m{u, v};
    require(mumford_valid(curve, m), "ideal does not satisfy the Mumford congruence");
    return m;
}

Ideal involution(const Ideal& I) {
    Polynomial neg_y = -Polynomial::variable(kXY, I.field(), Var::Y);
    std::vector<Polynomial> gens;
    for (auto& g : I.generators()) gens.push_back(g.substitute(Var::Y, neg_y));
    return Ideal(kXY, I.field(), gens);
}

Polynomial weighted_min_element(const Ideal& I, const MonomialOrder& ord) {
    require(!I.is_zero_ideal(), "minimal element of the zero ideal");
    const auto& gb = I.groebner_basis(ord);
    return gb.front();  // bases are sorted ascending by leading monomial
}

MumfordPair cantor_compose(const HyperellipticCurve& curve, const MumfordPair& a, const MumfordPair& b) {
    require(mumford_valid(curve, a) && mumford_valid(curve, b), "inputs violate the Mumford congruence");
    const Var X = Var::X;
    auto g1 = uv_ext_gcd(a.u, b.u, X);                    // e1 u1 + e2 u2 = d1
    auto g2 = uv_ext_gcd(g1.g, a.v + b.v, X);             // c1 d1 + c2 (v1 + v2) = d
    Polynomial d = g2.g;
    Polynomial s1 = g2.s * g1.s, s2 = g2.s * g1.t, s3 = g2.t;

    auto [u, ru] = uv_divmod(a.u * b.u, d * d, X);
    check_internal(ru.is_zero(), "composition gcd does not divide the product");
    u = uv_monic(u, X);
    Polynomial num = s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + curve.h());
    auto [vq, rv] = uv_divmod(num, d, X);
    check_internal(rv.is_zero(), "composition gcd does not divide the v numerator");
    Polynomial v = uv_mod(vq, u, X);
    return {u, v};
}

MumfordPair cantor_reduce_step(const HyperellipticCurve& curve, const MumfordPair& a) {
    const Var X = Var::X;
    auto [u, r] = uv_divmod(a.v * a.v - curve.h(), a.u, X);
    check_internal(r.is_zero(), "reduction step on an invalid pair");
    u = uv_monic(u, X);
    Polynomial v = uv_mod(-a.v, u, X);
    return {u, v};
}

MumfordPair cantor_compose_reduce(const HyperellipticCurve& curve, const MumfordPair& a,
                                  const MumfordPair& b) {
    MumfordPair m = cantor_compose(curve, a, b);
    while (m.u.degree_in(Var::X) > curve.genus()) m = cantor_reduce_step(curve, m);
    check_internal(mumford_valid(curve, m), "reduction left the Mumford locus");
    return m;
}

Ideal he_reduce(const HyperellipticCurve& curve, const Ideal& Iplus, const Ideal& Iminus,
                Polynomial* min_element) {
    require(Iplus.field() == curve.field() && Iminus.field() == curve.field(), "field mismatch");
    check_affine_divisor_ideal(Iplus, curve.equation());
    check_affine_divisor_ideal(Iminus, curve.equation());

    Ideal J = Iminus.is_unit() ? Iplus : ideal_product(Iplus, involution(Iminus));
    Ideal JC = with_equation(J, curve.equation());
    Polynomial f = weighted_min_element(JC, curve.order());
    if (min_element) *min_element = f;

    Ideal fC(kXY, curve.field(), {f, curve.equation()});
    Ideal residual = ideal_quotient(fC, JC);
    Ideal result = involution(residual).reduced();

    // Lemma-9 count: residual degree matches the weighted degree of f.
    const auto wdeg = curve.order().weighted_degree(f.leading_term(curve.order()).mono);
    const int expect = static_cast<int>(wdeg) - divisor_degree_affine(Iplus, curve.equation()) -
                       divisor_degree_affine(Iminus, curve.equation());
    check_internal(divisor_degree_affine(result, curve.equation()) == expect,
                   "weighted degree accounting failed in he_reduce");
    return result;
}

Ideal pc_reduce(const SuperellipticCurve& curve, const Ideal& Iplus, const Ideal& Iminus,
                Polynomial* first_min, Polynomial* second_min) {
    require(Iplus.field() == curve.field() && Iminus.field() == curve.field(), "field mismatch");
    check_affine_divisor_ideal(Iplus, curve.equation());
    check_affine_divisor_ideal(Iminus, curve.equation());
    const Field f = curve.field();

    Ideal IplusC = with_equation(Iplus, curve.equation());
    Polynomial f1 = weighted_min_element(IplusC, curve.order());
    if (first_min) *first_min = f1;
    Ideal Dprime = ideal_quotient(Ideal(kXY, f, {f1, curve.equation()}), IplusC);

    // first residual count: deg D' = deg(f1) - deg D+
    const int deg_plus = divisor_degree_affine(Iplus, curve.equation());
    const int deg_minus = divisor_degree_affine(Iminus, curve.equation());
    const auto w1 = curve.order().weighted_degree(f1.leading_term(curve.order()).mono);
    check_internal(divisor_degree_affine(Dprime, curve.equation()) == static_cast<int>(w1) - deg_plus,
                   "weighted degree accounting failed in the first reduction step");

    Ideal DpMinus = Iminus.is_unit() ? Dprime : ideal_product(Dprime, Iminus);
    Ideal DpMinusC = with_equation(DpMinus, curve.equation());
    Polynomial f2 = weighted_min_element(DpMinusC, curve.order());
    if (second_min) *second_min = f2;
    Ideal result = ideal_quotient(Ideal(kXY, f, {f2, curve.equation()}), DpMinusC);

    const auto w2 = curve.order().weighted_degree(f2.leading_term(curve.order()).mono);
    check_internal(divisor_degree_affine(result, curve.equation()) ==
                       static_cast<int>(w2) - (static_cast<int>(w1) - deg_plus) - deg_minus,
                   "weighted degree accounting failed in the second reduction step");
    return result.reduced();
}

Polynomial norm_polynomial(int m, const Polynomial& h, const Polynomial& f) {
    require(m >= 1, "invalid exponent");
    require(f.degree_in(Var::Y) < m, "norm input must be reduced in y");
    const Field K = f.field();
    // coefficients of f in y
    std::vector<Polynomial> p(m, Polynomial::zero(kXY, K));
    for (auto& t : f.terms()) {
        int j = t.mono.exponent(Var::Y);
        p[j] = p[j] + Polynomial::monomial(kXY, t.mono.with_exponent(Var::Y, 0), t.coeff);
    }
    // multiplication-by-f matrix on 1, y, ..., y^{m-1} over k[x][y]/(y^m - h)
    std::vector<std::vector<Polynomial>> M(m, std::vector<Polynomial>(m, Polynomial::zero(kXY, K)));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) M[i][j] = i >= j ? p[i - j] : h * p[i + m - j];

    // Laplace expansion; m stays tiny here.
    std::function<Polynomial(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rows, std::vector<int> cols) -> Polynomial {
        if (rows.size() == 1) return M[rows[0]][cols[0]];
        Polynomial acc = Polynomial::zero(kXY, K);
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (M[rows[0]][cols[k]].is_zero()) continue;
            std::vector<int> sub_cols;
            for (std::size_t l = 0; l < cols.size(); ++l)
                if (l != k) sub_cols.push_back(cols[l]);
            Polynomial minor = det(sub_rows, sub_cols);
            Polynomial term = M[rows[0]][cols[k]] * minor;
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    return det(idx, idx);
}

}  // namespace jacplane
