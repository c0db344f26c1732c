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

#ifndef JACPLANE_ORDER_HPP
#define JACPLANE_ORDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jacplane/monomial.hpp"

namespace jacplane {

/// A monomial order: lexicographic, graded lexicographic, or weighted
/// degree-lexicographic, optionally underneath a single elimination block
/// variable (compared first, by bare exponent).
class MonomialOrder {
   public:
    enum class Kind { Lex, GrLex, Weighted };

    /// Precedence lists the variables from greatest to smallest and fixes
    /// the variable universe the order understands.
    static MonomialOrder lex(std::vector<Var> precedence);
    static MonomialOrder grlex(std::vector<Var> precedence);
    /// Weighted degree first (weights per precedence entry, all > 0), ties
    /// broken lexicographically along the precedence.
    static MonomialOrder weighted(std::vector<Var> precedence, std::vector<std::int64_t> weights);

    /// Block order with `v` eliminated first; `v` must not already occur.
    MonomialOrder block_over(Var v) const;

    Kind kind() const { return kind_; }
    const std::vector<Var>& precedence() const { return prec_; }
    std::optional<Var> block_var() const { return block_; }

    /// Three-way comparison; errors on monomials using unknown variables.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Total weight of a monomial under a weighted order (degree under the
    /// graded orders). Lemma-9-style intersection counts read off this.
    std::int64_t weighted_degree(const Monomial& m) const;

    bool operator==(const MonomialOrder& o) const;
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
    /// Strict order for cache keys.
    bool operator<(const MonomialOrder& o) const { return key() < o.key(); }

    std::string to_string() const;

   private:
    MonomialOrder(Kind k, std::vector<Var> prec, std::vector<std::int64_t> w)
        : kind_(k), prec_(std::move(prec)), weights_(std::move(w)) {}

    void check_known(const Monomial& m) const;
    std::string key() const;

    Kind kind_;
    std::vector<Var> prec_;
    std::vector<std::int64_t> weights_;  // parallel to prec_ for Weighted
    std::optional<Var> block_;
};

/// compare_monomials(a, b, ord): < 0, 0 or > 0.
inline int compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    return ord.compare(a, b);
}

/// Default orders per universe (precedence x > y > z > t).
MonomialOrder default_grlex(const Universe& u);
MonomialOrder default_lex(const Universe& u);

}  // namespace jacplane

#endif
