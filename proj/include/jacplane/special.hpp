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

#ifndef JACPLANE_SPECIAL_HPP
#define JACPLANE_SPECIAL_HPP

#include "jacplane/ideal.hpp"

namespace jacplane {

/// y^2 = h(x) with h of odd degree 2g+1 and distinct roots; the base point
/// is the single point at infinity. Divisor arithmetic runs on affine ideals
/// in k[x, y] under the weighted order with x of weight 2 and y of weight
/// 2g+1 (the pole orders at infinity), ties broken with y > x.
class HyperellipticCurve {
   public:
    static HyperellipticCurve make(const Polynomial& h);

    int genus() const { return g_; }
    const Polynomial& h() const { return h_; }
    const Field& field() const { return h_.field(); }
    /// y^2 - h(x), the affine curve polynomial.
    const Polynomial& equation() const { return eq_; }
    const MonomialOrder& order() const { return ord_; }

   private:
    HyperellipticCurve(int g, Polynomial h, Polynomial eq, MonomialOrder ord)
        : g_(g), h_(std::move(h)), eq_(std::move(eq)), ord_(std::move(ord)) {}
    int g_;
    Polynomial h_;
    Polynomial eq_;
    MonomialOrder ord_;
};

/// y^m = h(x) with gcd(m, deg h) = 1 and h squarefree; Picard curves are
/// m = 3, deg h = 4. Weights are the pole orders at the single infinite
/// point: x has weight m, y has weight deg h.
class SuperellipticCurve {
   public:
    static SuperellipticCurve make(int m, const Polynomial& h);
    static SuperellipticCurve picard(const Polynomial& h);

    int m() const { return m_; }
    int genus() const { return (m_ - 1) * (h_.degree_in(Var::X) - 1) / 2; }
    const Polynomial& h() const { return h_; }
    const Field& field() const { return h_.field(); }
    const Polynomial& equation() const { return eq_; }
    const MonomialOrder& order() const { return ord_; }

   private:
    SuperellipticCurve(int m, Polynomial h, Polynomial eq, MonomialOrder ord)
        : m_(m), h_(std::move(h)), eq_(std::move(eq)), ord_(std::move(ord)) {}
    int m_;
    Polynomial h_;
    Polynomial eq_;
    MonomialOrder ord_;
};

/// Mumford representation of a semireduced divisor: u monic, deg v < deg u,
/// v^2 = h mod u.
struct MumfordPair {
    Polynomial u, v;
};

MumfordPair mumford_identity(const Field& f);
bool mumford_valid(const HyperellipticCurve& curve, const MumfordPair& m);

/// Ideal (u, v - y) of the semireduced divisor.
Ideal mumford_to_ideal(const MumfordPair& m);
/// Inverse conversion through the weighted/lex shape; errors when the ideal
/// is not of semireduced form.
MumfordPair ideal_to_mumford(const HyperellipticCurve& curve, const Ideal& I);

/// The hyperelliptic involution y -> -y applied to every generator.
Ideal involution(const Ideal& I);

/// Smallest reduced-basis element of a nonzero ideal under a weighted order.
Polynomial weighted_min_element(const Ideal& I, const MonomialOrder& ord);

/// Classical composition and reduction in Mumford coordinates. The general
/// composition (extended gcd, non-coprime case included).
MumfordPair cantor_compose(const HyperellipticCurve& curve, const MumfordPair& a, const MumfordPair& b);
MumfordPair cantor_reduce_step(const HyperellipticCurve& curve, const MumfordPair& a);
MumfordPair cantor_compose_reduce(const HyperellipticCurve& curve, const MumfordPair& a, const MumfordPair& b);

/// One-formula hyperelliptic reduction: the reduced ideal of the class of
/// D+ - D- - (deg D+ - deg D-) Pinf, for affine divisor ideals.
Ideal he_reduce(const HyperellipticCurve& curve, const Ideal& Iplus, const Ideal& Iminus,
                Polynomial* min_element = nullptr);

/// Two-step superelliptic reduction (Picard curves and their relatives).
Ideal pc_reduce(const SuperellipticCurve& curve, const Ideal& Iplus, const Ideal& Iminus,
                Polynomial* first_min = nullptr, Polynomial* second_min = nullptr);

/// Norm of f = p_0 + p_1 y + ... + p_{m-1} y^{m-1} down to k[x]: the
/// determinant of multiplication by f on k[x][y] / (y^m - h).
Polynomial norm_polynomial(int m, const Polynomial& h, const Polynomial& f);

}  // namespace jacplane

#endif
