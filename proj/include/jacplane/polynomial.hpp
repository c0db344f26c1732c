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

#ifndef JACPLANE_POLYNOMIAL_HPP
#define JACPLANE_POLYNOMIAL_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacplane/field.hpp"
#include "jacplane/order.hpp"

namespace jacplane {

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Degree of the zero polynomial: a sentinel below every real degree.
constexpr int kDegreeMinusInfinity = std::numeric_limits<int>::min();

/// A sparse multivariate polynomial over a fixed field and universe.
/// Values are immutable; all operations return fresh polynomials.
class Polynomial {
   public:
    Polynomial(Universe u, Field f) : u_(u), f_(f) {}
    Polynomial(Universe u, Field f, std::vector<Term> terms);

    static Polynomial zero(Universe u, Field f) { return Polynomial(u, f); }
    static Polynomial constant(Universe u, const Scalar& c);
    static Polynomial monomial(Universe u, const Monomial& m, const Scalar& c);
    static Polynomial variable(Universe u, Field f, Var v);

    const Universe& universe() const { return u_; }
    const Field& field() const { return f_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    /// Total degree; kDegreeMinusInfinity for the zero polynomial.
    int degree() const;
    int degree_in(Var v) const;
    bool is_homogeneous() const;

    Scalar coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;
    Polynomial pow(int k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Term leading_term(const MonomialOrder& ord) const;

    /// Substitute a field value for a variable; result lives in the universe
    /// without that variable.
    Polynomial substitute(Var v, const Scalar& value) const;
    /// Substitute a polynomial for a variable (used by the hyperelliptic
    /// involution y -> -y and by chart changes).
    Polynomial substitute(Var v, const Polynomial& value) const;
    /// Rename a variable (universe adjusts accordingly).
    Polynomial rename(Var from, Var to) const;

    Scalar evaluate(const std::vector<std::pair<Var, Scalar>>& point) const;

    Polynomial derivative(Var v) const;

    /// Multiply each term by var^(d - term degree). Errors if target < degree.
    Polynomial homogenize(Var v, std::optional<int> target_degree = std::nullopt) const;
    /// Set var := 1.
    Polynomial dehomogenize(Var v) const;

    /// Canonical representative of the scalar class: over Q, integer content
    /// one and positive leading coefficient under ord; over F_p, monic.
    Polynomial normalized(const MonomialOrder& ord) const;

    std::string to_string() const;
    std::string to_string(const MonomialOrder& ord) const;

    /// Descending order used for internal term storage (graded lex over the
    /// whole variable pool).
    static bool canonical_before(const Monomial& a, const Monomial& b);

   private:
    void validate_terms() const;

    Universe u_;
    Field f_;
    std::vector<Term> terms_;  // descending canonical order, no zero coefficients
};

Polynomial operator*(const Scalar& c, const Polynomial& p);

enum class PolyOp { add, mul };
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op);

}  // namespace jacplane

#endif
