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

#include "jacplane/field.hpp"

namespace jacplane {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses decide primality for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    require(p >= 2 && is_prime_u64(p), "field modulus must be prime");
    require(p < (1ull << 62), "field modulus too large");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, long value) : field_(f) {
    if (f.is_rational()) {
        v_ = mpq_class(value);
    } else {
        const std::uint64_t p = f.characteristic();
        long r = value % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        v_ = static_cast<std::uint64_t>(r);
    }
}

Scalar::Scalar(const Field& f, const mpz_class& value) : field_(f) {
    if (f.is_rational()) {
        v_ = mpq_class(value);
    } else {
        mpz_class p(static_cast<unsigned long>(f.characteristic()));
        mpz_class r = value % p;
        if (r < 0) r += p;
        v_ = static_cast<std::uint64_t>(r.get_ui());
    }
}

Scalar Scalar::from_rational(const mpq_class& q) {
    Scalar s;
    s.field_ = Field::rationals();
    mpq_class c = q;
    c.canonicalize();
    s.v_ = c;
    return s;
}

Scalar Scalar::from_residue(const Field& f, std::uint64_t r) {
    require(f.is_prime_field(), "residue constructor needs a prime field");
    Scalar s;
    s.field_ = f;
    s.v_ = r % f.characteristic();
    return s;
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return std::get<mpq_class>(v_) == 0;
    return std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return std::get<mpq_class>(v_) == 1;
    return std::get<std::uint64_t>(v_) == 1;
}

std::uint64_t Scalar::residue() const {
    check_internal(field_.is_prime_field(), "residue() on a rational value");
    return std::get<std::uint64_t>(v_);
}

const mpq_class& Scalar::rational() const {
    check_internal(field_.is_rational(), "rational() on a prime-field value");
    return std::get<mpq_class>(v_);
}

void Scalar::check_same_field(const Scalar& o) const {
    require(field_ == o.field_, "field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.is_rational()) {
        r.v_ = mpq_class(-std::get<mpq_class>(v_));
    } else {
        std::uint64_t a = std::get<std::uint64_t>(v_);
        r.v_ = a == 0 ? 0 : field_.characteristic() - a;
    }
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r = *this;
    if (field_.is_rational()) {
        r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
    } else {
        std::uint64_t p = field_.characteristic();
        std::uint64_t s = std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_);
        if (s >= p) s -= p;
        r.v_ = s;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r = *this;
    if (field_.is_rational()) {
        r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
    } else {
        r.v_ = mulmod_u64(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), field_.characteristic());
    }
    return r;
}

Scalar Scalar::inverse() const {
    require(!is_zero(), "division by zero in " + field_.to_string());
    Scalar r = *this;
    if (field_.is_rational()) {
        r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
    } else {
        std::uint64_t p = field_.characteristic();
        r.v_ = powmod_u64(std::get<std::uint64_t>(v_), p - 2, p);
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    if (field_.is_rational()) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
}

std::optional<Scalar> Scalar::sqrt() const {
    if (field_.is_rational()) {
        const mpq_class& q = std::get<mpq_class>(v_);
        if (q < 0) return std::nullopt;
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class rn, rd;
        if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return from_rational(mpq_class(rn) / mpq_class(rd));
    }
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t a = std::get<std::uint64_t>(v_);
    if (a == 0) return zero(field_);
    if (p == 2) return *this;
    if (powmod_u64(a, (p - 1) / 2, p) != 1) return std::nullopt;
    // Tonelli-Shanks.
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod_u64(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = powmod_u64(z, q, p);
    std::uint64_t t = powmod_u64(a, q, p);
    std::uint64_t r = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod_u64(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
        m = i;
        c = mulmod_u64(b, b, p);
        t = mulmod_u64(t, c, p);
        r = mulmod_u64(r, b, p);
    }
    return from_residue(field_, r);
}

bool Scalar::is_positive() const {
    if (field_.is_rational()) return std::get<mpq_class>(v_) > 0;
    return !is_zero();
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<std::uint64_t>(v_));
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::add: return a + b;
        case ScalarOp::sub: return a - b;
        case ScalarOp::mul: return a * b;
        case ScalarOp::div: return a / b;
    }
    throw internal_error("bad ScalarOp");
}

}  // namespace jacplane
