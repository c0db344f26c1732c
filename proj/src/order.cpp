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

#include "jacplane/order.hpp"

#include <sstream>

namespace jacplane {

std::string Universe::to_string() const {
    std::string s = "{";
    bool first = true;
    for (Var v : vars()) {
        if (!first) s += ",";
        s += var_name(v);
        first = false;
    }
    return s + "}";
}

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        int e = exponent(v);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

MonomialOrder MonomialOrder::lex(std::vector<Var> precedence) {
    return MonomialOrder(Kind::Lex, std::move(precedence), {});
}

MonomialOrder MonomialOrder::grlex(std::vector<Var> precedence) {
    return MonomialOrder(Kind::GrLex, std::move(precedence), {});
}

MonomialOrder MonomialOrder::weighted(std::vector<Var> precedence, std::vector<std::int64_t> weights) {
    require(precedence.size() == weights.size(), "weighted order needs one weight per variable");
    for (auto w : weights) require(w > 0, "weights must be positive");
    return MonomialOrder(Kind::Weighted, std::move(precedence), std::move(weights));
}

MonomialOrder MonomialOrder::block_over(Var v) const {
    for (Var p : prec_) check_internal(p != v, "block variable already in order");
    MonomialOrder o = *this;
    o.block_ = v;
    return o;
}

void MonomialOrder::check_known(const Monomial& m) const {
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (m.exponent(v) == 0) continue;
        if (block_ && *block_ == v) continue;
        bool known = false;
        for (Var p : prec_) known = known || (p == v);
        require(known, std::string("unknown variable ") + var_name(v) + " for order " + to_string());
    }
}

std::int64_t MonomialOrder::weighted_degree(const Monomial& m) const {
    check_known(m);
    std::int64_t d = 0;
    if (kind_ == Kind::Weighted) {
        for (std::size_t i = 0; i < prec_.size(); ++i) d += weights_[i] * m.exponent(prec_[i]);
    } else {
        for (Var v : prec_) d += m.exponent(v);
    }
    return d;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    check_known(a);
    check_known(b);
    if (block_) {
        int ea = a.exponent(*block_), eb = b.exponent(*block_);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    if (kind_ != Kind::Lex) {
        std::int64_t da = weighted_degree(a), db = weighted_degree(b);
        if (da != db) return da < db ? -1 : 1;
    }
    for (Var v : prec_) {
        int ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
}

bool MonomialOrder::operator==(const MonomialOrder& o) const { return key() == o.key(); }

std::string MonomialOrder::key() const {
    std::ostringstream os;
    os << static_cast<int>(kind_);
    if (block_) os << "|b" << var_name(*block_);
    for (std::size_t i = 0; i < prec_.size(); ++i) {
        os << "|" << var_name(prec_[i]);
        if (kind_ == Kind::Weighted) os << ":" << weights_[i];
    }
    return os.str();
}

std::string MonomialOrder::to_string() const {
    std::string s;
    switch (kind_) {
        case Kind::Lex: s = "lex"; break;
        case Kind::GrLex: s = "grlex"; break;
        case Kind::Weighted: s = "weighted"; break;
    }
    if (block_) s += "[" + std::string(var_name(*block_)) + " block]";
    s += "(";
    for (std::size_t i = 0; i < prec_.size(); ++i) {
        if (i) s += ">";
        s += var_name(prec_[i]);
        if (kind_ == Kind::Weighted) s += ":" + std::to_string(weights_[i]);
    }
    return s + ")";
}

MonomialOrder default_grlex(const Universe& u) { return MonomialOrder::grlex(u.vars()); }
MonomialOrder default_lex(const Universe& u) { return MonomialOrder::lex(u.vars()); }

}  // namespace jacplane
