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

#include "jacplane/parse.hpp"

#include <cctype>

namespace jacplane {

namespace {

// Recursive-descent over: expr := term (('+'|'-') term)*
//                          term := factor (('*')? factor)* ('/' integer)?
//                          factor := integer | variable ('^' integer)? | '(' expr ')'
// Division is only allowed by integer literals (rational coefficients).
struct Parser {
    const std::string& s;
    std::size_t i = 0;
    Universe u;
    Field f;

    explicit Parser(const std::string& text, Universe uu, Field ff) : s(text), u(uu), f(ff) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw validation_error("polynomial parse error at position " + std::to_string(i) + ": " + msg +
                               " in \"" + s + "\"");
    }

    mpz_class integer() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected integer");
        return mpz_class(s.substr(start, i - start));
    }

    int small_integer() {
        mpz_class z = integer();
        if (!z.fits_sint_p()) fail("exponent too large");
        return static_cast<int>(z.get_si());
    }

    std::optional<Var> variable() {
        skip();
        if (i >= s.size()) return std::nullopt;
        Var v;
        switch (s[i]) {
            case 'x': v = Var::X; break;
            case 'y': v = Var::Y; break;
            case 'z': v = Var::Z; break;
            case 't': v = Var::T; break;
            default: return std::nullopt;
        }
        if (!u.contains(v)) fail(std::string("variable ") + s[i] + " not allowed here");
        ++i;
        return v;
    }

    Polynomial factor() {
        skip();
        if (eat('(')) {
            Polynomial e = expr();
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) {
                int k = small_integer();
                if (k < 0) fail("negative exponent");
                e = e.pow(k);
            }
            return e;
        }
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            return Polynomial::constant(u, Scalar(f, integer()));
        }
        if (auto v = variable()) {
            int e = 1;
            if (eat('^')) e = small_integer();
            if (e < 0) fail("negative exponent");
            return Polynomial::monomial(u, Monomial::var(*v, e), Scalar::one(f));
        }
        fail("expected factor");
    }

    bool at_factor_start() {
        skip();
        if (i >= s.size()) return false;
        char c = s[i];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'y' ||
               c == 'z' || c == 't';
    }

    Polynomial term() {
        Polynomial r = factor();
        while (true) {
            if (eat('*')) {
                r = r * factor();
            } else if (eat('/')) {
                skip();
                mpz_class d = integer();
                if (d == 0) fail("division by zero");
                Scalar inv = Scalar(f, d).inverse();
                r = r * inv;
            } else if (at_factor_start()) {
                r = r * factor();
            } else {
                break;
            }
        }
        return r;
    }

    Polynomial expr() {
        bool neg = false;
        skip();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial r = term();
        if (neg) r = -r;
        while (true) {
            skip();
            if (eat('+')) {
                r = r + term();
            } else if (eat('-')) {
                r = r - term();
            } else {
                break;
            }
        }
        return r;
    }

    Polynomial run() {
        Polynomial r = expr();
        skip();
        if (i != s.size()) fail("trailing input");
        return r;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, Universe u, Field f) {
    return Parser(text, u, f).run();
}

}  // namespace jacplane
