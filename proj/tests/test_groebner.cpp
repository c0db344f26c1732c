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

#include <random>
#include <thread>

#include "golden_values.hpp"
#include "jacplane/ideal.hpp"
#include "jacplane/parse.hpp"

using namespace jacplane;

namespace {

const Field kQ = Field::rationals();
const Universe kXY = Universe::affine_xy();
const MonomialOrder kLexXY = MonomialOrder::lex({Var::X, Var::Y});

Polynomial P(const std::string& s, Universe u = kXY, Field f = kQ) { return parse_polynomial(s, u, f); }

Ideal make_ideal(std::initializer_list<std::string> gens, Universe u = kXY, Field f = kQ) {
    std::vector<Polynomial> ps;
    for (auto& s : gens) ps.push_back(parse_polynomial(s, u, f));
    return Ideal(u, f, ps);
}

// The point ideal of an affine point on a curve: ((x-a, y-b)^m, curve).
Ideal contact_ideal(const Polynomial& curve, const std::string& a, const std::string& b, int m) {
    Universe u = curve.universe();
    Field f = curve.field();
    Polynomial dx = P("x - (" + a + ")", u, f), dy = P("y - (" + b + ")", u, f);
    std::vector<Polynomial> gens;
    for (int i = 0; i <= m; ++i) gens.push_back(dx.pow(i) * dy.pow(m - i));
    gens.push_back(curve);
    return Ideal(u, f, gens);
}

bool matches_printed(const std::vector<Polynomial>& gb, std::vector<std::string> printed, Universe u = kXY,
                     Field f = kQ, const MonomialOrder& ord = kLexXY) {
    if (gb.size() != printed.size()) return false;
    std::vector<Polynomial> want;
    for (auto& s : printed) want.push_back(parse_polynomial(s, u, f).normalized(ord));
    std::sort(want.begin(), want.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
    });
    for (std::size_t i = 0; i < gb.size(); ++i)
        if (gb[i] != want[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("groebner basis basics") {
    Ideal I = make_ideal({"x"});
    CHECK(I.groebner_basis(kLexXY) == std::vector<Polynomial>{P("x")});
    // idempotence: running the engine on its own output returns the output
    Ideal I2 = make_ideal({"x^2 + y^2 - 4", "x*y - 1"});
    auto gb = I2.groebner_basis(kLexXY);
    Ideal I3(kXY, kQ, gb);
    CHECK(I3.groebner_basis(kLexXY) == gb);

    Ideal unitish = make_ideal({"x", "x + 1"});
    CHECK(unitish.is_unit());
    CHECK(unitish.groebner_basis(kLexXY) == std::vector<Polynomial>{P("1")});
}

TEST_CASE("printed bases of the quartic example") {
    Polynomial curve = P("x^4 + y^4 - 2");

    Ideal Iplus = contact_ideal(curve, "1", "-1", 6);
    auto gb_plus = Iplus.groebner_basis(kLexXY);
    CHECK(matches_printed(gb_plus, {golden::kQuarticIplus[0], golden::kQuarticIplus[1]}));

    Ideal I3 = contact_ideal(curve, "1", "1", 3);
    CHECK(matches_printed(I3.groebner_basis(kLexXY), {golden::kQuarticI3[0], golden::kQuarticI3[1]}));

    Ideal step1 = ideal_sum(ideal_product(Iplus, I3), make_ideal({"x^4 + y^4 - 2"}));
    CHECK(matches_printed(step1.groebner_basis(kLexXY), {golden::kQuarticStep1[0], golden::kQuarticStep1[1]}));

    // the degree-3 element of the step-1 ideal
    CHECK(membership(P(golden::kQuarticF), step1));
    CHECK(!membership(P(golden::kQuarticF), make_ideal({"x^4 + y^4 - 2"})));

    // J := ((f), I_C) : (Iplus * I3)
    Ideal fC = make_ideal({golden::kQuarticF, "x^4 + y^4 - 2"});
    Ideal J = ideal_quotient(fC, ideal_product(Iplus, I3));
    CHECK(matches_printed(J.groebner_basis(kLexXY), {golden::kQuarticJ[0], golden::kQuarticJ[1]}));

    Ideal I6 = contact_ideal(curve, "1", "1", 6);
    CHECK(matches_printed(I6.groebner_basis(kLexXY), {golden::kQuarticI6[0], golden::kQuarticI6[1]}));

    Ideal gC = make_ideal({golden::kQuarticG, "x^4 + y^4 - 2"});
    Ideal JI6 = ideal_sum(ideal_product(J, I6), make_ideal({"x^4 + y^4 - 2"}));
    CHECK(membership(P(golden::kQuarticG), JI6));
    Ideal Ired = ideal_quotient(gC, ideal_product(J, I6));
    CHECK(matches_printed(Ired.groebner_basis(kLexXY), {golden::kQuarticIred[0], golden::kQuarticIred[1]}));
}

TEST_CASE("membership") {
    CHECK(membership(P("x"), make_ideal({"x", "y"})));
    Polynomial F = P("x^4 + y^4 - 2");
    CHECK(membership(F, Ideal(kXY, kQ, {F})));
    CHECK_THROWS_AS(membership(P("z", Universe::projective()), make_ideal({"x"})), validation_error);
}

TEST_CASE("sum and product") {
    CHECK(ideal_product(make_ideal({"x"}), make_ideal({"y"})).equals(make_ideal({"x*y"})));
    Ideal I = make_ideal({"x^2 - y", "y^3 - 2"});
    CHECK(ideal_product(I, Ideal::unit(kXY, kQ)).equals(I));
}

TEST_CASE("intersection") {
    CHECK(ideal_intersection(make_ideal({"x"}), make_ideal({"y"})).equals(make_ideal({"x*y"})));
    Ideal I = make_ideal({"x^2 - y", "y^3 - 2"});
    CHECK(ideal_intersection(I, I).equals(I));

    // two distinct points on the quartic: intersection route = product route
    Polynomial curve = P("x^4 + y^4 - 2");
    Ideal IP = contact_ideal(curve, "1", "-1", 1);
    Ideal IQ = contact_ideal(curve, "-1", "1", 1);
    Ideal via_cap = ideal_intersection(IP, IQ);
    Ideal via_prod = ideal_sum(ideal_product(IP, IQ), Ideal(kXY, kQ, {curve}));
    CHECK(via_cap.equals(via_prod));

    // elimination correctness: every returned generator lies in both ideals
    for (auto& g : via_cap.generators()) {
        CHECK(membership(g, IP));
        CHECK(membership(g, IQ));
    }
    auto da = quotient_dimension(via_cap);
    REQUIRE(da.has_value());
    CHECK(*da <= *quotient_dimension(IP) + *quotient_dimension(IQ));
}

TEST_CASE("quotient") {
    CHECK(ideal_quotient(make_ideal({"x*y"}), make_ideal({"x"})).equals(make_ideal({"y"})));

    // quotient/product adjunction with equality on divisor ideals
    Polynomial curve = P("x^4 + y^4 - 2");
    Ideal IP = contact_ideal(curve, "1", "-1", 2);
    Ideal IQ = contact_ideal(curve, "-1", "-1", 1);
    Ideal prod = ideal_sum(ideal_product(IP, IQ), Ideal(kXY, kQ, {curve}));
    Ideal back = ideal_quotient(prod, IQ);
    CHECK(back.equals(IP));

    // adjoint inclusion (I*J) : J >= I on generic samples
    Ideal I = make_ideal({"x^2 + y", "x*y^2 - 3"});
    Ideal J = make_ideal({"x + y"});
    CHECK(ideal_quotient(ideal_product(I, J), J).generators().size() > 0);
    for (auto& g : I.generators()) CHECK(membership(g, ideal_quotient(ideal_product(I, J), J)));
}

TEST_CASE("graded pieces") {
    Universe pu = Universe::projective();
    auto ord = default_grlex(pu);
    Ideal I = make_ideal({"x", "y"}, pu);
    auto piece = graded_piece(I, 1, ord);
    REQUIRE(piece.size() == 2);
    CHECK(piece[0] == P("x", pu));
    CHECK(piece[1] == P("y", pu));
    CHECK(graded_piece(make_ideal({"x^2"}, pu), 1, ord).empty());

    // slice of a unit-content ideal: full space
    Ideal square = make_ideal({"x^2", "x*y", "y^2"}, pu);
    CHECK(graded_piece(square, 2, ord).size() == 3);
    CHECK_THROWS_AS(graded_piece(make_ideal({"x^2 + y"}, pu), 2, ord), validation_error);
}

TEST_CASE("quotient dimension") {
    CHECK(quotient_dimension(make_ideal({"x", "y"})) == 1);
    CHECK(quotient_dimension(make_ideal({"(x-2)^2", "(x-2)*(y-3)", "(y-3)^2"})) == 3);
    CHECK(!quotient_dimension(make_ideal({"x"})).has_value());
    CHECK(quotient_dimension(Ideal::unit(kXY, kQ)) == 0);

    // the divisor 6P1 on the quartic has degree 6
    Polynomial curve = P("x^4 + y^4 - 2");
    Ideal Iplus = contact_ideal(curve, "1", "-1", 6);
    CHECK(quotient_dimension(Iplus) == 6);
}

TEST_CASE("membership soundness on random samples") {
    Field f31 = Field::prime(31);
    Ideal I = make_ideal({"x^2 + 3*y + 1", "y^2 - x"}, kXY, f31);
    std::mt19937_64 rng(17);
    auto rand_poly = [&](int terms, int deg) {
        std::vector<Term> ts;
        for (int i = 0; i < terms; ++i) {
            Monomial m = Monomial::var(Var::X, rng() % (deg + 1)) * Monomial::var(Var::Y, rng() % (deg + 1));
            ts.push_back({m, Scalar::from_residue(f31, rng() % 31)});
        }
        return Polynomial(kXY, f31, ts);
    };
    for (int i = 0; i < 100; ++i) {
        Polynomial combo = I.generators()[0] * rand_poly(3, 2) + I.generators()[1] * rand_poly(3, 2);
        CHECK(membership(combo, I));
        Polynomial probe = rand_poly(4, 3);
        auto nf = normal_form(probe, I.groebner_basis(default_grlex(kXY)), default_grlex(kXY));
        CHECK(membership(probe, I) == nf.is_zero());
    }
}

TEST_CASE("concurrent reads of one ideal are safe") {
    Ideal I = make_ideal({"x^3 - y + 1", "x*y^2 - 3*x + 2"});
    std::vector<std::thread> workers;
    std::vector<std::size_t> sizes(8, 0);
    for (int k = 0; k < 8; ++k) {
        workers.emplace_back([&, k] {
            auto ord = k % 2 ? kLexXY : default_grlex(kXY);
            sizes[k] = I.groebner_basis(ord).size();
        });
    }
    for (auto& w : workers) w.join();
    for (int k = 2; k < 8; ++k) CHECK(sizes[k] == sizes[k - 2]);
}

TEST_CASE("homogenization closes at infinity") {
    // The honest homogenization of a zero-dimensional affine ideal has no
    // zeros on the line z = 0.
    Ideal I = make_ideal({"x - 1", "y - 1"});
    Ideal H = homogenize_ideal(I, Var::Z);
    Universe pu = Universe::projective();
    Ideal at_infinity = ideal_sum(H, make_ideal({"z"}, pu));
    CHECK(quotient_dimension(ideal_sum(at_infinity, make_ideal({"x - 1"}, pu))).value_or(99) == 0);
}
