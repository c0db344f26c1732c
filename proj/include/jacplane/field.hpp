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

#ifndef JACPLANE_FIELD_HPP
#define JACPLANE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "jacplane/errors.hpp"

namespace jacplane {

/// Descriptor of the base field K: the rationals or a prime field F_p.
class Field {
   public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }

    /// Field characteristic; 0 for the rationals.
    std::uint64_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string to_string() const;

   private:
    std::uint64_t p_;  // 0 encodes Q
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// An exact element of K. Rationals are kept fully reduced with positive
/// denominator (mpq canonical form); prime-field residues live in [0, p).
class Scalar {
   public:
    Scalar() : field_(Field::rationals()), v_(mpq_class(0)) {}

    Scalar(const Field& f, long value);
    Scalar(const Field& f, const mpz_class& value);
    static Scalar from_rational(const mpq_class& q);
    static Scalar from_residue(const Field& f, std::uint64_t r);

    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue in [0, p); only valid on prime-field values.
    std::uint64_t residue() const;
    /// Reduced rational value; only valid on rational values.
    const mpq_class& rational() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Square root in K if one exists (Tonelli-Shanks over F_p, exact
    /// integer square roots over Q).
    std::optional<Scalar> sqrt() const;

    /// True for rationals with positive numerator; for F_p residues,
    /// interpreted as true (used only for sign normalization over Q).
    bool is_positive() const;

    std::string to_string() const;

   private:
    void check_same_field(const Scalar& o) const;

    Field field_;
    std::variant<std::uint64_t, mpq_class> v_;
};

/// a op b with op in {add, sub, mul, div}; exposed for symmetric use in
/// table-driven tests.
enum class ScalarOp { add, sub, mul, div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

}  // namespace jacplane

#endif
