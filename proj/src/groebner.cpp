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

#include "jacplane/ideal.hpp"

#include <algorithm>
#include <functional>

namespace jacplane {

namespace {

// Working representation: terms sorted descending under the active order.
struct OPoly {
    std::vector<Term> t;

    bool empty() const { return t.empty(); }
    const Term& lt() const { return t.front(); }
};

OPoly to_opoly(const Polynomial& p, const MonomialOrder& ord) {
    OPoly r;
    r.t = p.terms();
    std::sort(r.t.begin(), r.t.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    return r;
}

Polynomial from_opoly(const OPoly& p, Universe u, Field f) { return Polynomial(u, f, p.t); }

// r -= c * m * g, all sorted descending.
OPoly submul(const OPoly& r, const Scalar& c, const Monomial& m, const OPoly& g, const MonomialOrder& ord) {
    OPoly out;
    out.t.reserve(r.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    while (i < r.t.size() || j < g.t.size()) {
        if (j == g.t.size()) {
            out.t.push_back(r.t[i++]);
            continue;
        }
        Monomial gm = g.t[j].mono * m;
        if (i == r.t.size()) {
            out.t.push_back({gm, -(c * g.t[j].coeff)});
            ++j;
            continue;
        }
        int cmp = ord.compare(r.t[i].mono, gm);
        if (cmp > 0) {
            out.t.push_back(r.t[i++]);
        } else if (cmp < 0) {
            out.t.push_back({gm, -(c * g.t[j].coeff)});
            ++j;
        } else {
            Scalar nc = r.t[i].coeff - c * g.t[j].coeff;
            if (!nc.is_zero()) out.t.push_back({r.t[i].mono, nc});
            ++i;
            ++j;
        }
    }
    return out;
}

// Divide out integer content over Q to keep coefficients small mid-run.
void normalize_content(OPoly& p, const Field& f) {
    if (p.empty() || f.is_prime_field()) return;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& t : p.t) {
        const mpq_class& q = t.coeff.rational();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (scale == 1) return;
    Scalar s = Scalar::from_rational(scale);
    for (auto& t : p.t) t.coeff = t.coeff * s;
}

// Full normal form: every term of the result is irreducible.
OPoly reduce_full(OPoly p, const std::vector<OPoly>& basis, const MonomialOrder& ord, const Field& f) {
    OPoly rem;
    while (!p.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            if (g.lt().mono.divides(p.lt().mono)) {
                Scalar c = p.lt().coeff / g.lt().coeff;
                Monomial m = p.lt().mono / g.lt().mono;
                p = submul(p, c, m, g, ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.t.push_back(p.lt());
            p.t.erase(p.t.begin());
        }
    }
    normalize_content(rem, f);
    return rem;
}

OPoly s_polynomial(const OPoly& a, const OPoly& b, const MonomialOrder& ord, const Field&) {
    Monomial l = a.lt().mono.lcm(b.lt().mono);
    // l/lt(a) * a - (ca/cb) l/lt(b) * b, scaled so the leading terms cancel.
    OPoly r;
    Monomial ma = l / a.lt().mono;
    for (auto& t : a.t) r.t.push_back({t.mono * ma, t.coeff});
    Scalar c = a.lt().coeff / b.lt().coeff;
    return submul(r, c, l / b.lt().mono, b, ord);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& input, const MonomialOrder& ord, Universe u,
                                   Field f) {
    std::vector<OPoly> g;
    for (auto& p : input) {
        if (p.is_zero()) continue;
        g.push_back(to_opoly(p.normalized(ord), ord));
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        int deg;
    };
    auto make_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = g[i].lt().mono.lcm(g[j].lt().mono);
        return Pair{i, j, l, l.total_degree()};
    };

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;
    auto key_of = [](std::size_t i, std::size_t j) { return std::make_pair(std::min(i, j), std::max(i, j)); };
    auto push_pair = [&](std::size_t i, std::size_t j) {
        pending.push_back(make_pair(i, j));
        pending_keys.insert(key_of(i, j));
    };

    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) push_pair(i, j);

    while (!pending.empty()) {
        // Normal selection: smallest lcm degree first.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k)
            if (pending[k].deg < pending[best].deg) best = k;
        Pair pr = pending[best];
        pending.erase(pending.begin() + best);
        pending_keys.erase(key_of(pr.i, pr.j));

        // First criterion: coprime leading terms.
        if (g[pr.i].lt().mono.coprime_with(g[pr.j].lt().mono)) continue;
        // Chain criterion.
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j || g[k].empty()) continue;
            if (g[k].lt().mono.divides(pr.lcm) && !pending_keys.count(key_of(pr.i, k)) &&
                !pending_keys.count(key_of(k, pr.j)))
                skip = true;
        }
        if (skip) continue;

        OPoly s = s_polynomial(g[pr.i], g[pr.j], ord, f);
        OPoly r = reduce_full(std::move(s), g, ord, f);
        if (r.empty()) continue;
        Polynomial rp = from_opoly(r, u, f).normalized(ord);
        g.push_back(to_opoly(rp, ord));
        for (std::size_t k = 0; k + 1 < g.size(); ++k)
            if (!g[k].empty()) push_pair(k, g.size() - 1);
    }

    // Minimalize: drop basis elements whose leading term another divides.
    std::vector<OPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!g[j].lt().mono.divides(g[i].lt().mono)) continue;
            // On equal leading monomials keep the earlier element.
            if (g[j].lt().mono == g[i].lt().mono)
                redundant = j < i;
            else
                redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    // Tail-reduce each element against the others for the reduced basis.
    std::vector<Polynomial> result;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        OPoly r = reduce_full(minimal[i], others, ord, f);
        check_internal(!r.empty(), "minimal Groebner element reduced to zero");
        result.push_back(from_opoly(r, u, f).normalized(ord));
    }
    std::sort(result.begin(), result.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
    });
    return result;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    require(!basis.empty(), "normal form needs a nonempty basis");
    std::vector<OPoly> b;
    for (auto& g : basis) {
        check_universe(f.universe(), g.universe());
        if (!g.is_zero()) b.push_back(to_opoly(g, ord));
    }
    OPoly r = reduce_full(to_opoly(f, ord), b, ord, f.field());
    return from_opoly(r, f.universe(), f.field());
}

Ideal::Ideal(Universe u, Field f, std::vector<Polynomial> gens)
    : u_(u), f_(f), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        check_universe(u_, g.universe());
        require(g.field() == f_, "generator field mismatch");
        if (g.is_zero()) continue;
        if (g.is_constant()) {
            gens_ = {Polynomial::constant(u_, Scalar::one(f_))};
            return;
        }
        gens_.push_back(g);
    }
}

Ideal Ideal::unit(Universe u, Field f) {
    return Ideal(u, f, {Polynomial::constant(u, Scalar::one(f))});
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(ord);
    if (it != cache_->bases.end()) return it->second;
    auto basis = buchberger(gens_, ord, u_, f_);
    return cache_->bases.emplace(ord, std::move(basis)).first->second;
}

bool Ideal::contains(const Polynomial& f) const {
    check_universe(u_, f.universe());
    if (f.is_zero()) return true;
    if (gens_.empty()) return false;
    const auto& gb = groebner_basis(default_grlex(u_));
    return normal_form(f, gb, default_grlex(u_)).is_zero();
}

bool Ideal::is_unit() const {
    if (gens_.empty()) return false;
    for (auto& g : gens_)
        if (g.is_constant() && !g.is_zero()) return true;
    const auto& gb = groebner_basis(default_grlex(u_));
    return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::has_homogeneous_generators() const {
    for (auto& g : gens_)
        if (!g.is_homogeneous()) return false;
    return true;
}

Ideal Ideal::reduced() const {
    if (gens_.empty()) return *this;
    return Ideal(u_, f_, groebner_basis(default_grlex(u_)));
}

bool Ideal::equals(const Ideal& o) const {
    if (u_ != o.u_ || f_ != o.f_) return false;
    if (gens_.empty() || o.gens_.empty()) return gens_.empty() && o.gens_.empty();
    const auto& a = groebner_basis(default_grlex(u_));
    const auto& b = o.groebner_basis(default_grlex(u_));
    return a == b;
}

bool membership(const Polynomial& f, const Ideal& I) { return I.contains(f); }

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    check_universe(I.universe(), J.universe());
    require(I.field() == J.field(), "field mismatch");
    std::vector<Polynomial> gens = I.generators();
    for (auto& g : J.generators()) gens.push_back(g);
    return Ideal(I.universe(), I.field(), gens);
}

namespace {

// Small generating set for the heavy binary operations: the cached reduced
// graded-lex basis is usually far smaller than a raw generator list.
const std::vector<Polynomial>& compact_generators(const Ideal& I) {
    if (I.is_zero_ideal() || I.generators().size() <= 3) return I.generators();
    return I.groebner_basis(default_grlex(I.universe()));
}

}  // namespace

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    check_universe(I.universe(), J.universe());
    require(I.field() == J.field(), "field mismatch");
    std::vector<Polynomial> gens;
    for (auto& a : compact_generators(I))
        for (auto& b : compact_generators(J)) gens.push_back(a * b);
    return Ideal(I.universe(), I.field(), gens);
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    check_universe(I.universe(), J.universe());
    require(I.field() == J.field(), "field mismatch");
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(I.universe(), I.field());

    Universe u = I.universe();
    require(!u.contains(Var::T), "universe already uses the elimination variable");
    Universe ue = u.with(Var::T);
    Field f = I.field();

    Polynomial t = Polynomial::variable(ue, f, Var::T);
    Polynomial one_minus_t = Polynomial::constant(ue, Scalar::one(f)) - t;
    std::vector<Polynomial> gens;
    for (auto& g : compact_generators(I)) gens.push_back(t * Polynomial(ue, f, g.terms()));
    for (auto& g : compact_generators(J)) gens.push_back(one_minus_t * Polynomial(ue, f, g.terms()));

    MonomialOrder elim = default_grlex(u).block_over(Var::T);
    Ideal mixed(ue, f, gens);
    std::vector<Polynomial> result;
    const bool homogeneous = I.has_homogeneous_generators() && J.has_homogeneous_generators();
    for (auto& g : mixed.groebner_basis(elim)) {
        if (g.degree_in(Var::T) != 0) continue;
        Polynomial p(u, f, g.terms());
        if (homogeneous && !p.is_homogeneous()) {
            // Components of a member of a homogeneous ideal are members.
            std::map<int, std::vector<Term>> comps;
            for (auto& term : p.terms()) comps[term.mono.total_degree()].push_back(term);
            for (auto& [d, ts] : comps) result.push_back(Polynomial(u, f, ts));
        } else {
            result.push_back(p);
        }
    }
    return Ideal(u, f, result);
}

Polynomial poly_divide_exact(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    check_universe(f.universe(), g.universe());
    check_internal(!g.is_zero(), "division by zero polynomial");
    OPoly p = to_opoly(f, ord), d = to_opoly(g, ord);
    std::vector<Term> quotient;
    while (!p.empty()) {
        check_internal(d.lt().mono.divides(p.lt().mono), "inexact polynomial division");
        Scalar c = p.lt().coeff / d.lt().coeff;
        Monomial m = p.lt().mono / d.lt().mono;
        quotient.push_back({m, c});
        p = submul(p, c, m, d, ord);
    }
    return Polynomial(f.universe(), f.field(), quotient);
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    check_universe(I.universe(), J.universe());
    require(I.field() == J.field(), "field mismatch");
    if (J.is_zero_ideal()) return Ideal::unit(I.universe(), I.field());

    MonomialOrder ord = default_grlex(I.universe());
    std::optional<Ideal> acc;
    for (auto& g : compact_generators(J)) {
        if (g.is_zero()) continue;
        Ideal cap = ideal_intersection(I, Ideal(I.universe(), I.field(), {g}));
        std::vector<Polynomial> divided;
        for (auto& h : cap.generators()) divided.push_back(poly_divide_exact(h, g, ord));
        Ideal part(I.universe(), I.field(), divided);
        acc = acc ? ideal_intersection(*acc, part) : part;
    }
    return acc ? *acc : Ideal::unit(I.universe(), I.field());
}

Ideal ideal_saturation(const Ideal& I, const Polynomial& g) {
    Ideal cur = I;
    for (int guard = 0; guard < 256; ++guard) {
        Ideal next = ideal_quotient(cur, Ideal(I.universe(), I.field(), {g}));
        if (next.reduced().equals(cur.reduced())) return cur;
        cur = next;
    }
    throw internal_error("saturation did not stabilize");
}

std::vector<Monomial> monomials_of_degree(const Universe& u, int m) {
    std::vector<Var> vars = u.vars();
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i + 1 == vars.size()) {
            out.push_back(cur.with_exponent(vars[i], rest));
            return;
        }
        for (int e = rest; e >= 0; --e) {
            cur = cur.with_exponent(vars[i], e);
            rec(i + 1, rest - e);
        }
        cur = cur.with_exponent(vars[i], 0);
    };
    if (vars.empty()) {
        if (m == 0) out.push_back(Monomial::one());
        return out;
    }
    rec(0, m);
    return out;
}

std::vector<Polynomial> graded_piece(const Ideal& I, int m, const MonomialOrder& ord,
                                     const std::optional<std::set<Monomial>>& allowed) {
    require(I.has_homogeneous_generators(), "graded piece of an inhomogeneous ideal");
    require(m >= 0, "negative degree");
    if (I.is_zero_ideal()) return {};

    const Universe u = I.universe();
    const Field f = I.field();
    const auto& gb = I.groebner_basis(ord);
    for (auto& g : gb) check_internal(g.is_homogeneous(), "Groebner basis of homogeneous ideal is inhomogeneous");

    // Columns: excluded monomials first so surviving echelon rows have
    // support inside `allowed`, then descending by the active order.
    std::vector<Monomial> all = monomials_of_degree(u, m);
    std::vector<Monomial> cols;
    if (allowed) {
        for (auto& mo : all)
            if (!allowed->count(mo)) cols.push_back(mo);
    }
    std::size_t excluded_count = cols.size();
    std::vector<Monomial> rest;
    for (auto& mo : all)
        if (!allowed || allowed->count(mo)) rest.push_back(mo);
    std::sort(rest.begin(), rest.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    cols.insert(cols.end(), rest.begin(), rest.end());

    std::map<Monomial, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;

    std::vector<std::vector<Scalar>> rows;
    for (auto& g : gb) {
        int d = g.degree();
        if (d > m) continue;
        for (auto& mu : monomials_of_degree(u, m - d)) {
            Polynomial p = g * Polynomial::monomial(u, mu, Scalar::one(f));
            std::vector<Scalar> row(cols.size(), Scalar::zero(f));
            for (auto& t : p.terms()) row[col_of.at(t.mono)] = t.coeff;
            rows.push_back(std::move(row));
        }
    }

    // Exact reduced row echelon form.
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Scalar inv = rows[rank][c].inverse();
        for (auto& x : rows[rank]) x = x * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Scalar factor = rows[r][c];
            for (std::size_t k = c; k < cols.size(); ++k) rows[r][k] = rows[r][k] - factor * rows[rank][k];
        }
        ++rank;
    }
    rows.resize(rank);

    std::vector<Polynomial> out;
    for (auto& row : rows) {
        std::size_t pivot = 0;
        while (pivot < cols.size() && row[pivot].is_zero()) ++pivot;
        if (pivot == cols.size()) continue;
        if (allowed && pivot < excluded_count) continue;  // row leaves the restricted span
        std::vector<Term> ts;
        for (std::size_t c = pivot; c < cols.size(); ++c)
            if (!row[c].is_zero()) ts.push_back({cols[c], row[c]});
        out.push_back(Polynomial(u, f, ts).normalized(ord));
    }
    // Echelon rows sorted by descending leading monomial; the canonical
    // smallest-leading-monomial element is the back of the list.
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(a.leading_term(ord).mono, b.leading_term(ord).mono);
    });
    return out;
}

std::optional<int> quotient_dimension(const Ideal& I) {
    if (I.is_zero_ideal()) return std::nullopt;
    const MonomialOrder ord = default_grlex(I.universe());
    const auto& gb = I.groebner_basis(ord);
    if (gb.size() == 1 && gb[0].is_constant()) return 0;

    std::vector<Monomial> lts;
    for (auto& g : gb) lts.push_back(g.leading_term(ord).mono);

    // Finite staircase iff every variable has a pure power among the
    // leading terms; the bound per variable caps the enumeration.
    std::vector<Var> vars = I.universe().vars();
    std::vector<int> bound(vars.size(), -1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        for (auto& lt : lts) {
            bool pure = lt.exponent(vars[i]) > 0;
            for (auto v2 : vars)
                if (v2 != vars[i] && lt.exponent(v2) > 0) pure = false;
            if (pure) {
                int e = lt.exponent(vars[i]);
                if (bound[i] < 0 || e < bound[i]) bound[i] = e;
            }
        }
        if (bound[i] < 0) return std::nullopt;
    }

    int count = 0;
    Monomial cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == vars.size()) {
            for (auto& lt : lts)
                if (lt.divides(cur)) return;
            ++count;
            return;
        }
        for (int e = 0; e < bound[i]; ++e) {
            cur = cur.with_exponent(vars[i], e);
            rec(i + 1);
        }
        cur = cur.with_exponent(vars[i], 0);
    };
    rec(0);
    return count;
}

Ideal homogenize_ideal(const Ideal& I, Var v) {
    require(!I.universe().contains(v), "homogenization variable already in universe");
    if (I.is_zero_ideal()) return Ideal::zero(I.universe().with(v), I.field());
    const auto& gb = I.groebner_basis(default_grlex(I.universe()));
    std::vector<Polynomial> gens;
    for (auto& g : gb) gens.push_back(g.homogenize(v));
    return Ideal(I.universe().with(v), I.field(), gens);
}

Ideal dehomogenize_ideal(const Ideal& I, Var v) {
    std::vector<Polynomial> gens;
    for (auto& g : I.generators()) gens.push_back(g.dehomogenize(v));
    return Ideal(I.universe().without(v), I.field(), gens);
}

}  // namespace jacplane
