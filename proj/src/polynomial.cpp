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

#include "jacplane/polynomial.hpp"

#include <algorithm>

namespace jacplane {

bool Polynomial::canonical_before(const Monomial& a, const Monomial& b) {
    // Descending graded lex over x > y > z > t.
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v);
    }
    return false;
}

Polynomial::Polynomial(Universe u, Field f, std::vector<Term> terms) : u_(u), f_(f) {
    std::map<Monomial, Scalar> acc;
    for (auto& t : terms) {
        require(t.coeff.field() == f_, "coefficient field mismatch");
        require(t.mono.in_universe(u_), "monomial " + t.mono.to_string() + " outside universe " + u_.to_string());
        auto it = acc.find(t.mono);
        if (it == acc.end())
            acc.emplace(t.mono, t.coeff);
        else
            it->second += t.coeff;
    }
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms_.push_back({m, c});
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return canonical_before(a.mono, b.mono); });
}

Polynomial Polynomial::constant(Universe u, const Scalar& c) {
    Polynomial p(u, c.field());
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(), c});
    return p;
}

Polynomial Polynomial::monomial(Universe u, const Monomial& m, const Scalar& c) {
    return Polynomial(u, c.field(), {{m, c}});
}

Polynomial Polynomial::variable(Universe u, Field f, Var v) {
    require(u.contains(v), "variable outside universe");
    return monomial(u, Monomial::var(v), Scalar::one(f));
}

int Polynomial::degree() const {
    if (terms_.empty()) return kDegreeMinusInfinity;
    return terms_.front().mono.total_degree();  // canonical order is graded
}

int Polynomial::degree_in(Var v) const {
    if (terms_.empty()) return kDegreeMinusInfinity;
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().mono.total_degree();
    for (auto& t : terms_)
        if (t.mono.total_degree() != d) return false;
    return true;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    for (auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar::zero(f_);
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_universe(u_, o.u_);
    require(f_ == o.f_, "field mismatch");
    // Merge of two descending term lists.
    Polynomial r(u_, f_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && canonical_before(terms_[i].mono, o.terms_[j].mono))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || canonical_before(o.terms_[j].mono, terms_[i].mono)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].mono, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_universe(u_, o.u_);
    require(f_ == o.f_, "field mismatch");
    std::map<Monomial, Scalar> acc;
    for (auto& a : terms_) {
        for (auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            Scalar c = a.coeff * b.coeff;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, c);
            else
                it->second += c;
        }
    }
    Polynomial r(u_, f_);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, c});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return canonical_before(a.mono, b.mono); });
    return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    if (c.is_zero()) return zero(u_, f_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(int k) const {
    check_internal(k >= 0, "negative polynomial power");
    Polynomial r = constant(u_, Scalar::one(f_));
    Polynomial base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (u_ != o.u_ || f_ != o.f_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

Term Polynomial::leading_term(const MonomialOrder& ord) const {
    check_internal(!terms_.empty(), "leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (auto& t : terms_)
        if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Polynomial Polynomial::substitute(Var v, const Scalar& value) const {
    return substitute(v, Polynomial::constant(u_, value));
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
    require(f_ == value.field(), "field mismatch");
    Universe ru = value.universe();
    for (Var w : u_.vars())
        if (w != v) ru = ru.with(w);
    Polynomial lifted(ru, f_, value.terms());
    Polynomial r = zero(ru, f_);
    for (auto& t : terms_) {
        Monomial rest = t.mono.with_exponent(v, 0);
        Polynomial piece = Polynomial::monomial(ru, rest, t.coeff);
        int e = t.mono.exponent(v);
        if (e > 0) piece = piece * lifted.pow(e);
        r = r + piece;
    }
    return r;
}

Polynomial Polynomial::rename(Var from, Var to) const {
    if (from == to) return *this;
    require(!u_.contains(to), "rename target already in universe");
    Universe ru = u_.without(from).with(to);
    std::vector<Term> ts;
    for (auto& t : terms_) {
        Monomial m = t.mono.with_exponent(to, t.mono.exponent(from)).with_exponent(from, 0);
        ts.push_back({m, t.coeff});
    }
    return Polynomial(ru, f_, ts);
}

Scalar Polynomial::evaluate(const std::vector<std::pair<Var, Scalar>>& point) const {
    Scalar r = Scalar::zero(f_);
    for (auto& t : terms_) {
        Scalar v = t.coeff;
        for (auto& [var, val] : point) {
            for (int i = 0; i < t.mono.exponent(var); ++i) v = v * val;
        }
        // every universe variable must be assigned
        for (Var uv : u_.vars()) {
            bool found = false;
            for (auto& [var, val] : point) found = found || var == uv;
            require(found || t.mono.exponent(uv) == 0, "evaluation point misses a variable");
        }
        r = r + v;
    }
    return r;
}

Polynomial Polynomial::derivative(Var v) const {
    Polynomial r(u_, f_);
    std::vector<Term> ts;
    for (auto& t : terms_) {
        int e = t.mono.exponent(v);
        if (e == 0) continue;
        ts.push_back({t.mono.with_exponent(v, e - 1), t.coeff * Scalar(f_, e)});
    }
    return Polynomial(u_, f_, ts);
}

Polynomial Polynomial::homogenize(Var v, std::optional<int> target_degree) const {
    require(!u_.contains(v) || degree_in(v) == 0, "homogenization variable already in use");
    int d = degree();
    if (is_zero()) return Polynomial(u_.with(v), f_);
    int target = target_degree.value_or(d);
    require(target >= d, "homogenization target degree below polynomial degree");
    Universe ru = u_.with(v);
    std::vector<Term> ts;
    for (auto& t : terms_) {
        Monomial m = t.mono.with_exponent(v, target - t.mono.total_degree());
        ts.push_back({m, t.coeff});
    }
    return Polynomial(ru, f_, ts);
}

Polynomial Polynomial::dehomogenize(Var v) const {
    require(u_.contains(v), "dehomogenization variable not in universe");
    Universe ru = u_.without(v);
    std::vector<Term> ts;
    for (auto& t : terms_) ts.push_back({t.mono.with_exponent(v, 0), t.coeff});
    return Polynomial(ru, f_, ts);
}

Polynomial Polynomial::normalized(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    if (f_.is_prime_field()) {
        Scalar lc = leading_term(ord).coeff;
        return *this * lc.inverse();
    }
    // Integer content one, positive leading coefficient.
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& t : terms_) {
        const mpq_class& q = t.coeff.rational();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    Polynomial r = *this * Scalar::from_rational(scale);
    if (!r.leading_term(ord).coeff.is_positive()) r = -r;
    return r;
}

std::string Polynomial::to_string() const { return to_string(default_grlex(u_)); }

std::string Polynomial::to_string(const MonomialOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> sorted;
    for (auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](const Term* a, const Term* b) { return ord.greater(a->mono, b->mono); });
    std::string s;
    bool first = true;
    for (const Term* t : sorted) {
        std::string c = t->coeff.to_string();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (t->mono.is_one()) {
            s += c;
        } else if (c == "1") {
            s += t->mono.to_string();
        } else {
            s += c + "*" + t->mono.to_string();
        }
    }
    return s;
}

Polynomial poly_arith(const Polynomial& f, const Polynomial& g, PolyOp op) {
    return op == PolyOp::add ? f + g : f * g;
}

}  // namespace jacplane
