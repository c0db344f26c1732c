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

#ifndef JACPLANE_IDEAL_HPP
#define JACPLANE_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "jacplane/polynomial.hpp"

namespace jacplane {

/// Remainder of multivariate division of f by the basis sequence: no term of
/// the result is divisible by any basis leading term. Deterministic given the
/// order and the basis sequence.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord);

/// A polynomial ideal given by generators, with reduced Groebner bases
/// cached per monomial order. Values are immutable; the cache is shared and
/// internally synchronized, so concurrent reads are safe.
class Ideal {
   public:
    Ideal(Universe u, Field f, std::vector<Polynomial> gens);

    static Ideal zero(Universe u, Field f) { return Ideal(u, f, {}); }
    static Ideal unit(Universe u, Field f);

    const Universe& universe() const { return u_; }
    const Field& field() const { return f_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    /// The reduced Groebner basis: pairwise auto-reduced, canonically
    /// normalized, sorted ascending by leading monomial. Cached.
    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord) const;

    bool contains(const Polynomial& f) const;
    bool is_unit() const;
    bool is_zero_ideal() const { return gens_.empty(); }
    bool has_homogeneous_generators() const;

    /// An equal ideal whose generators are the reduced graded-lex basis.
    Ideal reduced() const;

    /// Ideal equality through reduced graded-lex bases.
    bool equals(const Ideal& o) const;

   private:
    struct Cache {
        std::mutex mu;
        std::map<MonomialOrder, std::vector<Polynomial>> bases;
    };

    Universe u_;
    Field f_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

bool membership(const Polynomial& f, const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

/// I cap J by the auxiliary-variable trick: eliminate t from t*I + (1-t)*J
/// under a t-block order. Generators of homogeneous inputs are split into
/// homogeneous components.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

/// I : J = { f : f*J in I }.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

/// I : g^infinity (stabilized iterated quotient).
Ideal ideal_saturation(const Ideal& I, const Polynomial& g);

/// K-basis of the degree-m slice of a homogeneous ideal, as a canonical
/// reduced-row-echelon basis with columns ordered descending by `ord`. When
/// `allowed` is given, the slice is intersected with the span of those
/// monomials first (the restricted linear systems for m >= n).
std::vector<Polynomial> graded_piece(const Ideal& I, int m, const MonomialOrder& ord,
                                     const std::optional<std::set<Monomial>>& allowed = std::nullopt);

/// Number of standard monomials of the ideal; nullopt when infinite.
std::optional<int> quotient_dimension(const Ideal& I);

/// Homogenization: homogenize a graded-lex Groebner basis of I by `v`, which
/// yields the ideal of all homogenized elements.
Ideal homogenize_ideal(const Ideal& I, Var v);
Ideal dehomogenize_ideal(const Ideal& I, Var v);

/// All monomials of total degree m over the universe.
std::vector<Monomial> monomials_of_degree(const Universe& u, int m);

/// Exact division by a single polynomial; throws internal_error when the
/// division leaves a remainder.
Polynomial poly_divide_exact(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

}  // namespace jacplane

#endif
