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

// Small univariate toolkit on top of Polynomial: division, gcd, extended
// gcd, interpolation. Used by the hyperelliptic/Cantor code and the chart
// bookkeeping at infinity.

#ifndef JACPLANE_UNIVARIATE_HPP
#define JACPLANE_UNIVARIATE_HPP

#include <utility>

#include "jacplane/polynomial.hpp"

namespace jacplane {

inline bool is_univariate_in(const Polynomial& p, Var v) {
    for (auto& t : p.terms())
        for (int i = 0; i < kNumVars; ++i)
            if (static_cast<Var>(i) != v && t.mono.exponent(static_cast<Var>(i)) != 0) return false;
    return true;
}

inline Scalar uv_leading(const Polynomial& p, Var v) {
    check_internal(!p.is_zero(), "leading coefficient of zero");
    return p.coefficient(Monomial::var(v, p.degree_in(v)));
}

inline Polynomial uv_monic(const Polynomial& p, Var v) {
    if (p.is_zero()) return p;
    return p * uv_leading(p, v).inverse();
}

inline std::pair<Polynomial, Polynomial> uv_divmod(const Polynomial& a, const Polynomial& b, Var v) {
    check_internal(!b.is_zero(), "univariate division by zero");
    Polynomial q = Polynomial::zero(a.universe(), a.field());
    Polynomial r = a;
    const int db = b.degree_in(v);
    const Scalar lb = uv_leading(b, v);
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int k = r.degree_in(v) - db;
        Scalar c = r.coefficient(Monomial::var(v, r.degree_in(v))) / lb;
        Polynomial shift = Polynomial::monomial(a.universe(), Monomial::var(v, k), c);
        q = q + shift;
        r = r - shift * b;
    }
    return {q, r};
}

inline Polynomial uv_mod(const Polynomial& a, const Polynomial& b, Var v) { return uv_divmod(a, b, v).second; }

inline Polynomial uv_gcd(Polynomial a, Polynomial b, Var v) {
    while (!b.is_zero()) {
        Polynomial r = uv_mod(a, b, v);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : uv_monic(a, v);
}

/// g = gcd(a, b) together with s, t such that s a + t b = g.
struct ExtGcd {
    Polynomial g, s, t;
};

inline ExtGcd uv_ext_gcd(const Polynomial& a, const Polynomial& b, Var v) {
    Universe u = a.universe();
    Field f = a.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(u, Scalar::one(f)), s1 = Polynomial::zero(u, f);
    Polynomial t0 = Polynomial::zero(u, f), t1 = Polynomial::constant(u, Scalar::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = uv_divmod(r0, r1, v);
        r0 = r1;
        r1 = r;
        Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar inv = uv_leading(r0, v).inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// Lagrange interpolation through distinct nodes (xs[i], ys[i]).
inline Polynomial uv_interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys, Universe u,
                                 Var v) {
    check_internal(xs.size() == ys.size() && !xs.empty(), "bad interpolation data");
    Field f = xs[0].field();
    Polynomial acc = Polynomial::zero(u, f);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Polynomial term = Polynomial::constant(u, ys[i]);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            Polynomial num = Polynomial::variable(u, f, v) - Polynomial::constant(u, xs[j]);
            term = term * num * (xs[i] - xs[j]).inverse();
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace jacplane

#endif
