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

#include "jacplane/io.hpp"

#include <fstream>
#include <sstream>

#include "jacplane/parse.hpp"
#include "jacplane/univariate.hpp"

namespace jacplane {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return strip(pos == std::string::npos ? line : line.substr(0, pos));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Scalar parse_scalar(const std::string& text, const Field& f) {
    std::string s = strip(text);
    require(!s.empty(), "empty coordinate");
    bool negative = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        i = 1;
    }
    auto slash = s.find('/');
    auto digits = [&](const std::string& part) {
        require(!part.empty(), "bad number '" + text + "'");
        for (char c : part) require(std::isdigit(static_cast<unsigned char>(c)), "bad number '" + text + "'");
        return mpz_class(part);
    };
    Scalar num(f, digits(strip(s.substr(i, slash == std::string::npos ? std::string::npos : slash - i))));
    if (slash != std::string::npos) {
        Scalar den(f, digits(strip(s.substr(slash + 1))));
        num = num / den;
    }
    return negative ? -num : num;
}

// "(a,b[,c])" -> coordinates
std::vector<Scalar> parse_tuple(const std::string& text, const Field& f) {
    std::string s = strip(text);
    require(s.size() >= 2 && s.front() == '(' && s.back() == ')', "expected a coordinate tuple, got '" + text + "'");
    std::vector<Scalar> out;
    for (auto& part : split(s.substr(1, s.size() - 2), ',')) out.push_back(parse_scalar(part, f));
    return out;
}

struct KeyValues {
    std::vector<std::pair<std::string, std::string>> items;
    std::optional<std::string> get(const std::string& key) const {
        for (auto& [k, v] : items)
            if (k == key) return v;
        return std::nullopt;
    }
};

KeyValues parse_key_values(const std::string& text) {
    KeyValues kv;
    int line_no = 0;
    for (auto& raw : split(text, '\n')) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (line.empty()) continue;
        auto eq = line.find('=');
        require(eq != std::string::npos,
                "line " + std::to_string(line_no) + ": expected 'key = value', got '" + line + "'");
        kv.items.push_back({strip(line.substr(0, eq)), strip(line.substr(eq + 1))});
    }
    return kv;
}

Field parse_field(const std::string& text) {
    std::string s = strip(text);
    if (s == "Q" || s == "q") return Field::rationals();
    require(s.size() > 2 && (s.substr(0, 2) == "Fp" || s.substr(0, 2) == "fp"),
            "field must be 'Q' or 'Fp <p>'");
    return Field::prime(std::stoull(strip(s.substr(2))));
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Session parse_curve_text(const std::string& text, std::optional<CurveType> type_override,
                         std::optional<int> superelliptic_m) {
    KeyValues kv = parse_key_values(text);
    Session s;
    s.field = parse_field(kv.get("field").value_or("Q"));

    CurveType type = CurveType::general;
    int m = superelliptic_m.value_or(0);
    if (auto t = kv.get("type")) {
        std::string v = strip(*t);
        if (v == "hyperelliptic") {
            type = CurveType::hyperelliptic;
        } else if (v == "picard") {
            type = CurveType::picard;
        } else if (v.rfind("superelliptic", 0) == 0) {
            type = CurveType::superelliptic;
            std::string rest = strip(v.substr(std::string("superelliptic").size()));
            if (!rest.empty()) m = std::stoi(rest);
        } else {
            throw validation_error("unknown curve type '" + v + "'");
        }
    }
    if (type_override) type = *type_override;
    s.type = type;

    auto curve_text = kv.get("curve");
    require(curve_text.has_value(), "curve file misses 'curve = ...'");

    if (type != CurveType::general) {
        // affine equation y^m = h(x), given as y^m - h(x)
        Polynomial eq = parse_polynomial(*curve_text, Universe::affine_xy(), s.field);
        int ydeg = eq.degree_in(Var::Y);
        require(ydeg >= 2, "special curve equation must contain a y power");
        Scalar lead = eq.coefficient(Monomial::var(Var::Y, ydeg));
        Polynomial ypow = Polynomial::monomial(Universe::affine_xy(), Monomial::var(Var::Y, ydeg), lead);
        Polynomial h = (ypow - eq) * lead.inverse();
        require(is_univariate_in(h, Var::X), "special curve equation must be y^m - h(x)");
        switch (type) {
            case CurveType::hyperelliptic:
                require(ydeg == 2, "hyperelliptic equations have y^2");
                s.hyperelliptic = HyperellipticCurve::make(h);
                break;
            case CurveType::picard:
                require(ydeg == 3, "Picard equations have y^3");
                s.superelliptic = SuperellipticCurve::picard(h);
                break;
            case CurveType::superelliptic:
                if (m == 0) m = ydeg;
                require(m == ydeg, "superelliptic exponent does not match the equation");
                s.superelliptic = SuperellipticCurve::make(m, h);
                break;
            default: break;
        }
        return s;
    }

    Polynomial F = parse_polynomial(*curve_text, Universe::projective(), s.field);
    std::vector<ProjectivePoint> nodes;
    if (auto nl = kv.get("nodes")) {
        std::string v = strip(*nl);
        require(v.size() >= 2 && v.front() == '[' && v.back() == ']', "nodes = [(x,y,z), ...]");
        std::string inner = strip(v.substr(1, v.size() - 2));
        // split on "),(" boundaries
        std::string cur;
        int depth = 0;
        for (char c : inner) {
            if (c == '(') depth++;
            if (c == ')') depth--;
            if (c == ',' && depth == 0) {
                auto coords = parse_tuple(strip(cur), s.field);
                require(coords.size() == 3, "node points need three coordinates");
                nodes.push_back(ProjectivePoint(coords[0], coords[1], coords[2]));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!strip(cur).empty()) {
            auto coords = parse_tuple(strip(cur), s.field);
            require(coords.size() == 3, "node points need three coordinates");
            nodes.push_back(ProjectivePoint(coords[0], coords[1], coords[2]));
        }
    }
    auto bp = kv.get("base_point");
    require(bp.has_value(), "curve file misses 'base_point = (x,y,z)'");
    auto coords = parse_tuple(*bp, s.field);
    require(coords.size() == 3, "base point needs three coordinates");
    ProjectivePoint base(coords[0], coords[1], coords[2]);

    std::optional<std::pair<int, int>> fixed;
    if (auto fm = kv.get("fixed_monomial")) {
        auto pair = parse_tuple(*fm, s.field);
        require(pair.size() == 2, "fixed_monomial = (k,l)");
        auto small = [&](const Scalar& sc) {
            require(sc.field().is_rational() ? sc.rational().get_den() == 1 : true, "integer expected");
            return sc.field().is_rational() ? static_cast<int>(sc.rational().get_num().get_si())
                                            : static_cast<int>(sc.residue());
        };
        fixed = {small(pair[0]), small(pair[1])};
    }

    s.curve = PlaneCurve::validate(F, nodes, base, fixed);
    return s;
}

Session load_curve_file(const std::string& path, std::optional<CurveType> type_override,
                        std::optional<int> superelliptic_m) {
    return parse_curve_text(read_file(path), type_override, superelliptic_m);
}

namespace {

struct DivisorLines {
    std::vector<std::tuple<std::vector<Scalar>, int, char>> points;  // coords, mult, branch (0 if none)
    std::vector<std::string> ideal_gens;
    std::optional<bool> delta;
};

DivisorLines parse_divisor_lines(const std::string& text, const Field& f) {
    DivisorLines out;
    std::string joined;
    for (auto& raw : split(text, '\n')) {
        std::string line = strip_comment(raw);
        if (line.empty()) continue;
        joined += line + "\n";
    }
    // raw ideal form: ideal { p; q; ... }
    auto ipos = joined.find("ideal");
    if (ipos != std::string::npos) {
        auto open = joined.find('{', ipos);
        auto close = joined.rfind('}');
        require(open != std::string::npos && close != std::string::npos && close > open,
                "ideal form is 'ideal { p; q; ... }'");
        for (auto& part : split(joined.substr(open + 1, close - open - 1), ';')) {
            std::string p = strip(part);
            if (!p.empty()) out.ideal_gens.push_back(p);
        }
        std::string rest = joined.substr(0, ipos);
        for (auto& raw : split(rest, '\n')) {
            std::string line = strip(raw);
            if (line.rfind("delta", 0) == 0) {
                auto eq = line.find('=');
                require(eq != std::string::npos, "delta = true|false");
                std::string v = strip(line.substr(eq + 1));
                out.delta = (v == "true" || v == "1");
            }
        }
        return out;
    }

    int line_no = 0;
    for (auto& raw : split(joined, '\n')) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty()) continue;
        if (line.rfind("delta", 0) == 0) {
            auto eq = line.find('=');
            require(eq != std::string::npos, "delta = true|false");
            std::string v = strip(line.substr(eq + 1));
            out.delta = (v == "true" || v == "1");
            continue;
        }
        require(line.rfind("point", 0) == 0,
                "line " + std::to_string(line_no) + ": expected 'point (...)', got '" + line + "'");
        std::string rest = strip(line.substr(5));
        auto close = rest.find(')');
        require(close != std::string::npos, "point line misses coordinates");
        auto coords = parse_tuple(rest.substr(0, close + 1), f);
        rest = strip(rest.substr(close + 1));
        int mult = 1;
        char branch = 0;
        while (!rest.empty()) {
            if (rest.rfind("mult", 0) == 0) {
                rest = strip(rest.substr(4));
                std::size_t i = 0;
                while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
                require(i > 0, "mult needs a positive integer");
                mult = std::stoi(rest.substr(0, i));
                rest = strip(rest.substr(i));
            } else if (rest.rfind("branch", 0) == 0) {
                rest = strip(rest.substr(6));
                require(!rest.empty() && (rest[0] == '+' || rest[0] == '-'), "branch needs + or -");
                branch = rest[0];
                rest = strip(rest.substr(1));
            } else {
                throw validation_error("unexpected token in point line: '" + rest + "'");
            }
        }
        out.points.push_back({coords, mult, branch});
    }
    return out;
}

}  // namespace

DivisorSpec parse_divisor_text(const Session& session, const std::string& text) {
    require(session.type == CurveType::general, "point divisors on special curves are affine");
    const CurvePtr& curve = session.curve;
    DivisorLines lines = parse_divisor_lines(text, session.field);

    if (!lines.ideal_gens.empty()) {
        // homogeneous generators are projective; otherwise the ideal is read
        // in the affine z = 1 chart and homogenized
        std::vector<Polynomial> gens;
        bool affine = false;
        for (auto& g : lines.ideal_gens) {
            Polynomial p = parse_polynomial(g, Universe::projective(), session.field);
            affine = affine || !p.is_homogeneous();
            gens.push_back(p);
        }
        bool delta = lines.delta.value_or(curve->is_nodal());
        if (affine) {
            std::vector<Polynomial> az;
            for (auto& g : gens) az.push_back(g.dehomogenize(Var::Z));
            az.push_back(curve->affine_z());
            Ideal H = homogenize_ideal(Ideal(Universe::affine_xy(), session.field, az), Var::Z);
            return DivisorSpec::raw(H, delta);
        }
        gens.push_back(curve->F());
        return DivisorSpec::raw(Ideal(Universe::projective(), session.field, gens), delta);
    }

    std::vector<DivisorEntry> entries;
    for (auto& [coords, mult, branch] : lines.points) {
        require(coords.size() == 3, "general-curve divisor points need three coordinates");
        ProjectivePoint p(coords[0], coords[1], coords[2]);
        DivisorEntry e{p, mult, std::nullopt};
        if (branch) {
            auto idx = curve->node_at(p);
            require(idx.has_value(), "branch tag on a point that is not a node: " + p.to_string());
            e.branch = std::make_pair(*idx, branch == '+' ? BranchSign::plus : BranchSign::minus);
        }
        entries.push_back(e);
    }
    return DivisorSpec::points(entries);
}

DivisorSpec load_divisor_file(const Session& session, const std::string& path) {
    return parse_divisor_text(session, read_file(path));
}

Ideal parse_affine_divisor_text(const Session& session, const std::string& text) {
    require(session.type != CurveType::general, "affine divisors belong to special curves");
    const Field f = session.field;
    const Universe axy = Universe::affine_xy();
    const Polynomial eq =
        session.hyperelliptic ? session.hyperelliptic->equation() : session.superelliptic->equation();
    DivisorLines lines = parse_divisor_lines(text, f);

    if (!lines.ideal_gens.empty()) {
        std::vector<Polynomial> gens;
        for (auto& g : lines.ideal_gens) gens.push_back(parse_polynomial(g, axy, f));
        return Ideal(axy, f, gens);
    }
    if (lines.points.empty()) return Ideal::unit(axy, f);

    std::optional<Ideal> acc;
    for (auto& [coords, mult, branch] : lines.points) {
        require(coords.size() == 2, "special-curve divisor points are affine (x,y)");
        require(branch == 0, "branch tags apply to nodal general curves only");
        Scalar on = eq.evaluate({{Var::X, coords[0]}, {Var::Y, coords[1]}});
        require(on.is_zero(), "divisor point is not on the curve");
        Polynomial dx = Polynomial::variable(axy, f, Var::X) - Polynomial::constant(axy, coords[0]);
        Polynomial dy = Polynomial::variable(axy, f, Var::Y) - Polynomial::constant(axy, coords[1]);
        std::vector<Polynomial> gens;
        for (int i = 0; i <= mult; ++i) gens.push_back(dx.pow(i) * dy.pow(mult - i));
        gens.push_back(eq);
        Ideal part(axy, f, gens);
        acc = acc ? ideal_intersection(*acc, part) : part;
    }
    return *acc;
}

Ideal load_affine_divisor_file(const Session& session, const std::string& path) {
    return parse_affine_divisor_text(session, read_file(path));
}

}  // namespace jacplane
