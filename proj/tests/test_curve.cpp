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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden_values.hpp"
#include "jacplane/curve.hpp"
#include "jacplane/parse.hpp"

using namespace jacplane;

namespace {

const Field kQ = Field::rationals();
const Universe kPU = Universe::projective();

ProjectivePoint pt(long x, long y, long z, Field f = kQ) {
    return ProjectivePoint(Scalar(f, x), Scalar(f, y), Scalar(f, z));
}

CurvePtr quartic() {
    return PlaneCurve::validate(parse_polynomial(golden::kQuarticCurve, kPU, kQ), {}, pt(1, 1, 1));
}

CurvePtr nodal_quartic() {
    return PlaneCurve::validate(parse_polynomial(golden::kNodalCurve, kPU, kQ), {pt(0, 0, 1)}, pt(1, 1, 0));
}

}  // namespace

TEST_CASE("validation of the worked curves") {
    auto sq = quartic();
    CHECK(sq->degree() == 4);
    CHECK(sq->genus() == 3);
    CHECK(!sq->is_nodal());

    auto nq = nodal_quartic();
    CHECK(nq->degree() == 4);
    CHECK(nq->genus() == 2);
    CHECK(nq->node_count() == 1);
    CHECK(!nq->base_point().is_finite());
}

TEST_CASE("validation rejections") {
    Polynomial F = parse_polynomial(golden::kQuarticCurve, kPU, kQ);
    // a declared node at a smooth point
    CHECK_THROWS_WITH_AS(PlaneCurve::validate(F, {pt(1, 1, 1)}, pt(1, -1, 1)),
                         doctest::Contains("smooth point"), validation_error);
    // base point off the curve
    CHECK_THROWS_AS(PlaneCurve::validate(F, {}, pt(2, 1, 1)), validation_error);
    // (0:1:0) on the curve
    Polynomial bad = parse_polynomial("x^4 + y^3*z - z^4", kPU, kQ);
    CHECK_THROWS_WITH_AS(PlaneCurve::validate(bad, {}, pt(1, 0, 1)), doctest::Contains("(0:1:0)"),
                         validation_error);
    // undeclared node
    Polynomial nodal = parse_polynomial(golden::kNodalCurve, kPU, kQ);
    CHECK_THROWS_WITH_AS(PlaneCurve::validate(nodal, {}, pt(1, 1, 0)),
                         doctest::Contains("undeclared"), validation_error);
    // cuspidal: y^2 z^2 = x^4 + x^3 z has a non-simple double point at the origin
    Polynomial cusp = parse_polynomial("y^2*z^2 - x^4 - x^3*z", kPU, kQ);
    CHECK_THROWS_AS(PlaneCurve::validate(cusp, {pt(0, 0, 1)}, pt(0, 1, 1)), validation_error);
}

TEST_CASE("interpolation counts") {
    auto sq = quartic();
    CHECK(sq->b_m(3) == 9);
    CHECK(sq->b_m(4) == 13);
    CHECK(sq->b_m(2) == 5);

    auto nq = nodal_quartic();
    CHECK(nq->b_m(4) == 16 - 3);  // nodal formula uses the full arithmetic genus

    // cross-check against the further-intersection count c_m = g - C(n-m-1, 2)
    // in the window n-3 <= m < n, i.e. b_m = mn - g + C(n-m-1, 2)
    for (int m = 1; m <= 3; ++m) {
        int n = 4, g = 3;
        int k = n - m - 1;
        int binom = k >= 2 ? k * (k - 1) / 2 : 0;
        CHECK(sq->b_m(m) == m * n - g + binom);
    }
}

TEST_CASE("choice of interpolation degree") {
    auto sq = quartic();
    CHECK(sq->choose_m(6, 0) == 3);
    CHECK(sq->choose_m(6, 6) == 3);
    CHECK(sq->choose_m(0, 3) == 3);  // b_2 = 5 < 6 forces m = 3
    CHECK(nodal_quartic()->choose_m(2, 2) == 2);
}

TEST_CASE("restricted linear systems") {
    auto sq = quartic();
    CHECK(sq->fixed_monomial() == std::pair<int, int>{4, 0});  // x^4 leads in graded lex

    auto with_fixed = PlaneCurve::validate(parse_polynomial(golden::kQuarticCurve, kPU, kQ), {}, pt(1, 1, 1),
                                           std::pair<int, int>{0, 0});  // z^4 has coefficient -2
    CHECK(with_fixed->restricted_system(4).size() == 14);
    CHECK(with_fixed->restricted_system(5).size() == 18);
    CHECK(!with_fixed->restricted_system(4).count(Monomial::var(Var::Z, 4)));
    CHECK(with_fixed->restricted_system(4).count(Monomial::var(Var::X, 4)));

    // dimension of the restricted system is mn - g_full + 1
    for (int m = 4; m <= 6; ++m)
        CHECK(static_cast<int>(with_fixed->restricted_system(m).size()) == 4 * m - 3 + 1);
}

TEST_CASE("base contact ideals") {
    auto sq = quartic();
    auto lex = MonomialOrder::lex({Var::X, Var::Y});
    Ideal I3 = sq->base_contact_ideal(3);
    Ideal affine = dehomogenize_ideal(I3, Var::Z);
    auto gb = affine.groebner_basis(lex);
    REQUIRE(gb.size() == 2);
    Field f = kQ;
    Universe u = Universe::affine_xy();
    CHECK(gb[0] == parse_polynomial(golden::kQuarticI3[0], u, f).normalized(lex));
    CHECK(gb[1] == (-parse_polynomial(golden::kQuarticI3[1], u, f)).normalized(lex));

    CHECK(sq->base_contact_ideal(0).is_unit());

    // infinite base point of the nodal curve: (x - y, z^2)
    auto nq = nodal_quartic();
    Ideal I2 = nq->base_contact_ideal(2);
    Ideal want(kPU, kQ, {parse_polynomial("x - y", kPU, kQ), parse_polynomial("z^2", kPU, kQ)});
    CHECK(I2.equals(want));

    // nesting and degree drop by one at each contact step
    auto prev = sq->base_contact_ideal(1);
    for (int r = 2; r <= 5; ++r) {
        Ideal cur = sq->base_contact_ideal(r);
        for (auto& g : cur.generators()) CHECK(membership(g, prev));
        auto dim_prev = quotient_dimension(dehomogenize_ideal(prev, Var::Z));
        auto dim_cur = quotient_dimension(dehomogenize_ideal(cur, Var::Z));
        REQUIRE(dim_prev.has_value());
        REQUIRE(dim_cur.has_value());
        CHECK(*dim_cur == *dim_prev + 1);
        prev = cur;
    }
}

TEST_CASE("branch expansions at the node") {
    auto nq = nodal_quartic();
    // y = x^3/30 - x^11/24300000 + ...
    auto plus = nq->branch_coefficients(0, BranchSign::plus, 12);
    CHECK(plus[0].is_zero());
    CHECK(plus[1].is_zero());
    CHECK(plus[2] == Scalar::from_rational(mpq_class(1, 30)));
    CHECK(plus[10] == Scalar::from_rational(mpq_class(-1, 24300000)));

    // x = -y^3/30 + ...
    auto minus = nq->branch_coefficients(0, BranchSign::minus, 12);
    CHECK(minus[0].is_zero());
    CHECK(minus[1].is_zero());
    CHECK(minus[2] == Scalar::from_rational(mpq_class(-1, 30)));
    CHECK(minus[10] == Scalar::from_rational(mpq_class(1, 24300000)));

    // substituting the truncation into the affine curve vanishes to order k
    for (int k : {4, 8, 13}) {
        auto a = nq->branch_coefficients(0, BranchSign::plus, k + 1);
        Universe u = Universe::affine_xy();
        Polynomial series = Polynomial::zero(u, kQ);
        for (int i = 0; i < k; ++i)
            series = series + Polynomial::monomial(u, Monomial::var(Var::X, i + 1), a[i]);
        Polynomial residual = nq->affine_z().substitute(Var::Y, series);
        for (auto& t : residual.terms()) CHECK(t.mono.exponent(Var::X) > k);
    }
}

TEST_CASE("branch tangents at a generic node") {
    // x y + higher-order terms at the origin: tangents y = 0 and x = 0
    Polynomial F = parse_polynomial("x*y*z^2 + x^4 - y^4", kPU, kQ);
    auto c = PlaneCurve::validate(F, {pt(0, 0, 1)}, pt(1, 1, 0));
    CHECK(c->genus() == 2);
    auto a = c->branch_coefficients(0, BranchSign::plus, 3);
    CHECK(a[0].is_zero());  // slope of the y-branch is 0

    // node with two distinct rational slopes: y^2 = x^2 (1 + x): slopes +-1
    Polynomial G = parse_polynomial("y^2*z^2 - x^2*z^2 - x^3*z - y^4", kPU, kQ);
    auto c2 = PlaneCurve::validate(G, {pt(0, 0, 1)}, pt(0, 1, 1));
    auto am = c2->branch_coefficients(0, BranchSign::plus, 2);
    auto ap = c2->branch_coefficients(0, BranchSign::minus, 2);
    CHECK(am[0] == Scalar(kQ, -1));
    CHECK(ap[0] == Scalar(kQ, 1));

    // irrational tangents are rejected: y^2 = 2 x^2 + x^3 over Q
    Polynomial H = parse_polynomial("y^2*z^2 - 2*x^2*z^2 - x^3*z - y^4", kPU, kQ);
    CHECK_THROWS_WITH_AS(PlaneCurve::validate(H, {pt(0, 0, 1)}, pt(0, 1, 1)),
                         doctest::Contains("not rational"), validation_error);
}
