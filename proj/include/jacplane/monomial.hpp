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

#ifndef JACPLANE_MONOMIAL_HPP
#define JACPLANE_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "jacplane/errors.hpp"

namespace jacplane {

/// The global variable pool. T is reserved for elimination orders and never
/// appears in user-facing polynomials.
enum class Var : std::uint8_t { X = 0, Y = 1, Z = 2, T = 3 };

constexpr int kNumVars = 4;

inline const char* var_name(Var v) {
    switch (v) {
        case Var::X: return "x";
        case Var::Y: return "y";
        case Var::Z: return "z";
        case Var::T: return "t";
    }
    return "?";
}

/// A set of admissible variables. Cross-universe operations are errors, not
/// coercions; the chart bookkeeping depends on it.
class Universe {
   public:
    Universe() : mask_(0) {}
    Universe(std::initializer_list<Var> vars) : mask_(0) {
        for (Var v : vars) mask_ |= bit(v);
    }

    static Universe affine_xy() { return {Var::X, Var::Y}; }
    static Universe chart_yz() { return {Var::Y, Var::Z}; }
    static Universe projective() { return {Var::X, Var::Y, Var::Z}; }
    static Universe univariate_x() { return {Var::X}; }

    bool contains(Var v) const { return mask_ & bit(v); }
    Universe with(Var v) const {
        Universe u = *this;
        u.mask_ |= bit(v);
        return u;
    }
    Universe without(Var v) const {
        Universe u = *this;
        u.mask_ &= ~bit(v);
        return u;
    }

    /// Variables in canonical x, y, z, t order.
    std::vector<Var> vars() const {
        std::vector<Var> r;
        for (int i = 0; i < kNumVars; ++i)
            if (mask_ & (1u << i)) r.push_back(static_cast<Var>(i));
        return r;
    }

    std::size_t size() const { return vars().size(); }

    bool operator==(const Universe& o) const { return mask_ == o.mask_; }
    bool operator!=(const Universe& o) const { return mask_ != o.mask_; }

    std::string to_string() const;

   private:
    static std::uint8_t bit(Var v) { return static_cast<std::uint8_t>(1u << static_cast<int>(v)); }
    std::uint8_t mask_;
};

inline void check_universe(const Universe& a, const Universe& b) {
    require(a == b, "universe mismatch: " + a.to_string() + " vs " + b.to_string());
}

/// A power product of variables; zero exponents are implicit.
class Monomial {
   public:
    Monomial() { e_.fill(0); }

    static Monomial one() { return Monomial(); }
    static Monomial var(Var v, int k = 1) {
        Monomial m;
        m.e_[idx(v)] = static_cast<std::uint16_t>(k);
        return m;
    }

    int exponent(Var v) const { return e_[idx(v)]; }
    Monomial with_exponent(Var v, int k) const {
        Monomial m = *this;
        m.e_[idx(v)] = static_cast<std::uint16_t>(k);
        return m;
    }

    int total_degree() const {
        int d = 0;
        for (auto x : e_) d += x;
        return d;
    }

    bool is_one() const { return total_degree() == 0; }

    bool divides(const Monomial& m) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    bool coprime_with(const Monomial& m) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e_[i] && m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] + m.e_[i]);
        return r;
    }

    /// Exact division; caller guarantees m | *this.
    Monomial operator/(const Monomial& m) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) {
            check_internal(e_[i] >= m.e_[i], "monomial division is not exact");
            r.e_[i] = static_cast<std::uint16_t>(e_[i] - m.e_[i]);
        }
        return r;
    }

    Monomial lcm(const Monomial& m) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e_[i] = std::max(e_[i], m.e_[i]);
        return r;
    }

    bool in_universe(const Universe& u) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e_[i] && !u.contains(static_cast<Var>(i))) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    /// Arbitrary strict order for use as a map key only.
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

    std::string to_string() const;

   private:
    static int idx(Var v) { return static_cast<int>(v); }
    std::array<std::uint16_t, kNumVars> e_;
};

}  // namespace jacplane

#endif
