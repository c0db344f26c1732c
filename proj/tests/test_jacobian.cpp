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

#include "golden_values.hpp"
#include "jacplane/jacobian.hpp"
#include "jacplane/points.hpp"
#include "jacplane/parse.hpp"

using namespace jacplane;

namespace {

const Field kQ = Field::rationals();
const Universe kPU = Universe::projective();
const Universe kXY = Universe::affine_xy();

ProjectivePoint pt(long x, long y, long z, Field f = kQ) {
    return ProjectivePoint(Scalar(f, x), Scalar(f, y), Scalar(f, z));
}

CurvePtr quartic(Field f = kQ) {
    return PlaneCurve::validate(parse_polynomial(golden::kQuarticCurve, kPU, f), {}, pt(1, 1, 1, f));
}

CurvePtr nodal_quartic() {
    return PlaneCurve::validate(parse_polynomial(golden::kNodalCurve, kPU, kQ), {pt(0, 0, 1)}, pt(1, 1, 0));
}

Ideal printed_ideal(const std::vector<std::string>& gens, Universe u, Field f) {
    std::vector<Polynomial> ps;
    for (auto& s : gens) ps.push_back(parse_polynomial(s, u, f));
    return Ideal(u, f, ps);
}

DivisorEntry point_entry(ProjectivePoint p, int mult) { return DivisorEntry{p, mult, std::nullopt}; }

std::vector<ProjectivePoint> affine_points(const CurvePtr& curve) {
    std::vector<ProjectivePoint> pts;
    const Field f = curve->field();
    for (std::uint64_t a = 0; a < f.characteristic(); ++a) {
        for (std::uint64_t b = 0; b < f.characteristic(); ++b) {
            ProjectivePoint p(Scalar::from_residue(f, a), Scalar::from_residue(f, b), Scalar::one(f));
            Scalar v = curve->F().evaluate({{Var::X, p.x()}, {Var::Y, p.y()}, {Var::Z, p.z()}});
            if (v.is_zero() && !curve->node_at(p)) pts.push_back(p);
        }
    }
    return pts;
}

JacobianElement random_element(const CurvePtr& curve, const std::vector<ProjectivePoint>& pts,
                               std::mt19937_64& rng) {
    std::vector<DivisorEntry> d;
    int deg = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < deg; ++i) d.push_back(point_entry(pts[rng() % pts.size()], 1));
    return reduce_divisors(curve, DivisorSpec::points(d), DivisorSpec::points({}));
}

}  // namespace

TEST_CASE("reduction of the quartic example") {
    auto sq = quartic();
    ReductionTrace trace;
    JacobianElement E = reduce_divisors(sq, DivisorSpec::points({point_entry(pt(1, -1, 1), 6)}),
                                        DivisorSpec::points({point_entry(pt(1, 1, 1), 6)}), &trace);

    CHECK(E.t() == 3);
    CHECK(E.alpha() == 0);
    CHECK(trace.m == 3);
    CHECK(trace.first_contact_order == 3);
    CHECK(trace.second_contact_order == 6);

    auto lexgb = [&](const Ideal& I) { return dehomogenize_ideal(I, Var::Z); };
    // every printed stage of the chain appears
    REQUIRE(trace.stages.size() == 6);
    CHECK(lexgb(trace.stages[0].second)
              .equals(printed_ideal({golden::kQuarticI3[0], golden::kQuarticI3[1]}, kXY, kQ)));
    CHECK(lexgb(trace.stages[1].second)
              .equals(printed_ideal({golden::kQuarticStep1[0], golden::kQuarticStep1[1]}, kXY, kQ)));
    CHECK(lexgb(trace.stages[2].second)
              .equals(printed_ideal({golden::kQuarticJ[0], golden::kQuarticJ[1]}, kXY, kQ)));
    CHECK(lexgb(trace.stages[3].second)
              .equals(printed_ideal({golden::kQuarticI6[0], golden::kQuarticI6[1]}, kXY, kQ)));
    CHECK(lexgb(trace.stages[5].second)
              .equals(printed_ideal({golden::kQuarticIred[0], golden::kQuarticIred[1]}, kXY, kQ)));

    // the interpolating cubics are unique up to scale
    auto lex = MonomialOrder::lex({Var::X, Var::Y});
    CHECK(trace.G->dehomogenize(Var::Z).normalized(lex) ==
          parse_polynomial(golden::kQuarticF, kXY, kQ).normalized(lex));
    CHECK(trace.Gprime->dehomogenize(Var::Z).normalized(lex) ==
          parse_polynomial(golden::kQuarticG, kXY, kQ).normalized(lex));

    // reducedness: the smallest element of I_red has degree 2 > n - 3
    CHECK(verify_reduced(sq, E.ideal(), E.t()));

    // the unstripped route (D- = 6 P0 fed as an ideal) gives the same class
    auto Iplus = ideal_of_divisor(sq, DivisorSpec::points({point_entry(pt(1, -1, 1), 6)}));
    auto I6 = ideal_of_divisor(sq, DivisorSpec::points({point_entry(pt(1, 1, 1), 6)}));
    JacobianElement E2 = reduce(sq, Iplus, I6);
    CHECK(E2.t() == 3);
    CHECK(E2.ideal().equals(E.ideal()));
}

TEST_CASE("reduction of the nodal example") {
    auto nq = nodal_quartic();
    DivisorEntry dplus{pt(0, 0, 1), 2, std::make_pair(std::size_t{0}, BranchSign::plus)};
    ReductionTrace trace;
    JacobianElement E =
        reduce_divisors(nq, DivisorSpec::points({dplus}),
                        DivisorSpec::points({point_entry(pt(4, 2, 1), 1), point_entry(pt(1, -1, 0), 1)}),
                        &trace);
    CHECK(E.t() == 2);
    CHECK(trace.m == 2);
    CHECK(E.ideal().ideal().equals(printed_ideal(
        {golden::kNodalIred[0], golden::kNodalIred[1], golden::kNodalIred[2], golden::kNodalIred[3]}, kPU, kQ)));
    CHECK(trace.stages[1].second.equals(printed_ideal(
        {golden::kNodalStep1[0], golden::kNodalStep1[1], golden::kNodalStep1[2], golden::kNodalStep1[3]}, kPU,
        kQ)));
    CHECK(trace.stages[2].second.equals(
        printed_ideal({golden::kNodalJ[0], golden::kNodalJ[1], golden::kNodalJ[2]}, kPU, kQ)));
    CHECK(trace.stages[4].second.equals(printed_ideal(
        {golden::kNodalStep2[0], golden::kNodalStep2[1], golden::kNodalStep2[2], golden::kNodalStep2[3]}, kPU,
        kQ)));
    CHECK(verify_reduced(nq, E.ideal(), E.t()));
}

TEST_CASE("zero divisor reduces to the identity") {
    auto sq = quartic();
    JacobianElement E = reduce_divisors(sq, DivisorSpec::points({}), DivisorSpec::points({}));
    CHECK(E.t() == 0);
    CHECK(E.is_identity());
    CHECK(equal(E, JacobianElement::identity(sq)));

    auto nq = nodal_quartic();
    JacobianElement En = reduce_divisors(nq, DivisorSpec::points({}), DivisorSpec::points({}));
    CHECK(En.t() == 0);
    CHECK(equal(En, JacobianElement::identity(nq)));
}

TEST_CASE("group law sanity over F31") {
    Field f31 = Field::prime(31);
    auto sq = quartic(f31);
    auto pts = affine_points(sq);
    REQUIRE(pts.size() >= 20);

    std::mt19937_64 rng(5);
    JacobianElement A = random_element(sq, pts, rng);
    JacobianElement B = random_element(sq, pts, rng);
    JacobianElement C = random_element(sq, pts, rng);
    JacobianElement id = JacobianElement::identity(sq);

    CHECK(equal(add(A, B), add(B, A)));
    CHECK(equal(add(add(A, B), C), add(A, add(B, C))));
    CHECK(equal(add(A, id), A));
    CHECK(equal(add(A, neg(A)), id));
    CHECK(equal(neg(neg(A)), A));

    // reduction idempotence
    JacobianElement again = reduce(sq, A.ideal(), empty_divisor_ideal(sq));
    CHECK(equal(again, A));

    // identity edge cases
    CHECK(equal(neg(id), id));
    JacobianElement single =
        reduce_divisors(sq, DivisorSpec::points({point_entry(pts[0], 1)}), DivisorSpec::points({}));
    CHECK(single.t() == 1);
    CHECK(!equal(id, single));  // degree-one classes are never principal when g >= 1

    // scalar multiplication
    CHECK(equal(scalar_mul(0, A), id));
    CHECK(equal(scalar_mul(2, A), add(A, A)));
    CHECK(equal(scalar_mul(-1, A), neg(A)));
    CHECK(equal(scalar_mul(5, A), add(add(add(add(A, A), A), A), A)));
}

TEST_CASE("two routes to the same class agree") {
    Field f31 = Field::prime(31);
    auto sq = quartic(f31);
    auto pts = affine_points(sq);
    std::mt19937_64 rng(7);

    // add(P - P0, Q - P0) equals reduce(P + Q - 2 P0)
    for (int i = 0; i < 5; ++i) {
        auto P = pts[rng() % pts.size()];
        auto Q = pts[rng() % pts.size()];
        auto EP = reduce_divisors(sq, DivisorSpec::points({point_entry(P, 1)}), DivisorSpec::points({}));
        auto EQ = reduce_divisors(sq, DivisorSpec::points({point_entry(Q, 1)}), DivisorSpec::points({}));
        auto sum = reduce_divisors(sq, DivisorSpec::points({point_entry(P, 1), point_entry(Q, 1)}),
                                   DivisorSpec::points({}));
        CHECK(equal(add(EP, EQ), sum));
    }

    // splitting 6P1 - 6P0 into two halves agrees with the direct reduction
    auto sqq = quartic();
    auto direct = reduce_divisors(sqq, DivisorSpec::points({point_entry(pt(1, -1, 1), 6)}),
                                  DivisorSpec::points({point_entry(pt(1, 1, 1), 6)}));
    auto half = reduce_divisors(sqq, DivisorSpec::points({point_entry(pt(1, -1, 1), 3)}),
                                DivisorSpec::points({point_entry(pt(1, 1, 1), 3)}));
    CHECK(equal(add(half, half), direct));

    // and 6 * (P1 - P0) reaches the same class
    auto one = reduce_divisors(sqq, DivisorSpec::points({point_entry(pt(1, -1, 1), 1)}),
                               DivisorSpec::points({point_entry(pt(1, 1, 1), 1)}));
    CHECK(equal(scalar_mul(6, one), direct));
}

TEST_CASE("principal divisors vanish in the Jacobian") {
    Field f31 = Field::prime(31);
    auto sq = quartic(f31);

    // (G)/(z^m) is a rational function: its divisor reduces to the identity
    std::mt19937_64 rng(11);
    for (int i = 0; i < 3; ++i) {
        std::vector<Term> ts;
        for (auto& mono : monomials_of_degree(kPU, 2))
            ts.push_back({mono, Scalar::from_residue(f31, rng() % 31)});
        Polynomial G(kPU, f31, ts);
        if (G.is_zero() || membership(G, Ideal(kPU, f31, {sq->F()}))) continue;
        auto IG = ideal_of_divisor(sq, DivisorSpec::raw(Ideal(kPU, f31, {G, sq->F()}), false));
        Polynomial z2 = parse_polynomial("z^2", kPU, f31);
        auto Iz = ideal_of_divisor(sq, DivisorSpec::raw(Ideal(kPU, f31, {z2, sq->F()}), false));
        CHECK(IG.degree_on_curve() == 8);
        CHECK(Iz.degree_on_curve() == 8);
        JacobianElement E = reduce(sq, IG, Iz);
        CHECK(E.is_identity());
    }
}

TEST_CASE("quintic group law and the restricted systems") {
    Field f11 = Field::prime(11);
    auto c = PlaneCurve::validate(parse_polynomial("x^5 + y^5 - 2*z^5", kPU, f11), {}, pt(1, 1, 1, f11));
    CHECK(c->genus() == 6);
    auto pts = affine_points(c);
    REQUIRE(pts.size() >= 10);

    auto E1 = reduce_divisors(
        c, DivisorSpec::points({point_entry(pts[0], 1), point_entry(pts[1], 1), point_entry(pts[2], 1)}),
        DivisorSpec::points({}));
    auto E2 = reduce_divisors(c, DivisorSpec::points({point_entry(pts[3], 2), point_entry(pts[4], 1)}),
                              DivisorSpec::points({}));
    auto S = add(E1, E2);
    CHECK(S.t() <= 6);
    CHECK(equal(S, add(E2, E1)));
    CHECK(equal(add(S, neg(E2)), E1));
    CHECK(equal(add(E1, neg(E1)), JacobianElement::identity(c)));

    // a principal divisor needs m = 6 > n, so the interpolation draws from
    // the restricted linear system
    Polynomial G = parse_polynomial("x^3 + 2*x*y*z + 3*y^3 + z^3 + 5*x^2*y", kPU, f11);
    auto IG = ideal_of_divisor(c, DivisorSpec::raw(Ideal(kPU, f11, {G, c->F()}), false));
    Polynomial z3 = parse_polynomial("z^3", kPU, f11);
    auto Iz = ideal_of_divisor(c, DivisorSpec::raw(Ideal(kPU, f11, {z3, c->F()}), false));
    CHECK(IG.degree_on_curve() == 15);
    CHECK(Iz.degree_on_curve() == 15);
    CHECK(reduce(c, IG, Iz).is_identity());
}

TEST_CASE("nodal group law") {
    auto nq = nodal_quartic();
    DivisorEntry dplus{pt(0, 0, 1), 2, std::make_pair(std::size_t{0}, BranchSign::plus)};
    JacobianElement E =
        reduce_divisors(nq, DivisorSpec::points({dplus}),
                        DivisorSpec::points({point_entry(pt(4, 2, 1), 1), point_entry(pt(1, -1, 0), 1)}));
    JacobianElement id = JacobianElement::identity(nq);
    CHECK(equal(add(E, id), E));
    CHECK(equal(add(E, neg(E)), id));
    CHECK(equal(neg(neg(E)), E));
    JacobianElement again = reduce(nq, E.ideal(), empty_divisor_ideal(nq));
    CHECK(equal(again, E));
}

TEST_CASE("two-node curve with nodes in both charts") {
    // both nodes have x != 0, so the x-chart adjoint twist is nontrivial,
    // and the only rational non-node points are at infinity
    Polynomial F = parse_polynomial("(x^2 - z^2)^2 - y^2*z^2 - y^4", kPU, kQ);
    auto c = PlaneCurve::validate(F, {pt(1, 0, 1), pt(-1, 0, 1)}, pt(1, 1, 0));
    CHECK(c->genus() == 1);
    CHECK(!c->adjoint_affine_x().is_unit());

    ProjectivePoint P = pt(1, -1, 0);  // the other rational infinite point
    auto EP = reduce_divisors(c, DivisorSpec::points({point_entry(P, 1)}), DivisorSpec::points({}));
    CHECK(EP.t() <= 1);
    CHECK(verify_reduced(c, EP.ideal(), EP.t()));

    JacobianElement id = JacobianElement::identity(c);
    CHECK(equal(add(EP, neg(EP)), id));

    // P - P reduces to the identity through the two-chart machinery
    auto zero = reduce_divisors(c, DivisorSpec::points({point_entry(P, 1)}),
                                DivisorSpec::points({point_entry(P, 1)}));
    CHECK(zero.is_identity());

    // doubling and halving along the group law stays consistent
    auto twoP = reduce_divisors(c, DivisorSpec::points({point_entry(P, 2)}), DivisorSpec::points({}));
    CHECK(equal(add(EP, EP), twoP));
}

TEST_CASE("numeric points") {
    auto sq = quartic();
    // a doubled point shows up with multiplicity two
    auto I2 = ideal_of_divisor(sq, DivisorSpec::points({point_entry(pt(1, -1, 1), 2)}));
    auto pts = divisor_points(I2, 1e-8);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].multiplicity == 2);
    CHECK(std::abs(pts[0].x.real() - 1) < 1e-9);
    CHECK(std::abs(pts[0].y.real() + 1) < 1e-9);

    // the identity has no points
    CHECK(divisor_points(unit_divisor_ideal(sq), 1e-8).empty());

    // prime fields are refused
    Field f31 = Field::prime(31);
    auto sq31 = quartic(f31);
    CHECK_THROWS_AS(divisor_points(unit_divisor_ideal(sq31), 1e-8), validation_error);

    // the reduced quartic representative has the expected complex points
    JacobianElement E = reduce_divisors(sq, DivisorSpec::points({point_entry(pt(1, -1, 1), 6)}),
                                        DivisorSpec::points({point_entry(pt(1, 1, 1), 6)}));
    auto red = divisor_points(E.ideal(), 1e-8);
    REQUIRE(red.size() == 3);
    CHECK(std::abs(red[0].x.real() - golden::kQuarticPointReal[0]) < 1e-4);
    CHECK(std::abs(red[0].y.real() - golden::kQuarticPointReal[1]) < 1e-4);
    CHECK(std::abs(red[1].x.real() - golden::kQuarticPointCplx[0]) < 1e-4);
    CHECK(std::abs(std::abs(red[1].x.imag()) - std::abs(golden::kQuarticPointCplx[1])) < 1e-4);
    CHECK(std::abs(red[1].y.real() - golden::kQuarticPointCplx[2]) < 1e-4);
}

TEST_CASE("reducedness detection") {
    Field f31 = Field::prime(31);
    auto sq = quartic(f31);
    auto pts = affine_points(sq);

    // find three distinct collinear points on the curve
    std::optional<std::array<ProjectivePoint, 3>> collinear;
    for (std::size_t i = 0; i < pts.size() && !collinear; ++i) {
        for (std::size_t j = i + 1; j < pts.size() && !collinear; ++j) {
            for (std::size_t k = j + 1; k < pts.size() && !collinear; ++k) {
                // determinant of the three rows (x, y, 1)
                Scalar det = (pts[i].x() * pts[j].y() - pts[j].x() * pts[i].y()) -
                             (pts[i].x() * pts[k].y() - pts[k].x() * pts[i].y()) +
                             (pts[j].x() * pts[k].y() - pts[k].x() * pts[j].y());
                if (det.is_zero()) collinear = {pts[i], pts[j], pts[k]};
            }
        }
    }
    REQUIRE(collinear.has_value());
    auto I = ideal_of_divisor(sq, DivisorSpec::points({point_entry((*collinear)[0], 1),
                                                       point_entry((*collinear)[1], 1),
                                                       point_entry((*collinear)[2], 1)}));
    CHECK(!verify_reduced(sq, I, 3));

    // the collinear triple reduces to something smaller than t = 3
    JacobianElement E = reduce(sq, I, empty_divisor_ideal(sq));
    CHECK(E.t() < 3);
    CHECK(verify_reduced(sq, E.ideal(), E.t()));

    // t = 0: the unit ideal is reduced
    CHECK(verify_reduced(sq, unit_divisor_ideal(sq), 0));
    CHECK_THROWS_AS(verify_reduced(sq, unit_divisor_ideal(sq), 5), validation_error);
}
