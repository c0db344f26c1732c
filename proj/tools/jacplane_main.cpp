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

#include <iostream>

#include <CLI11.hpp>

#include "jacplane/io.hpp"
#include "jacplane/points.hpp"

namespace {

using namespace jacplane;

struct Options {
    std::string curve_file;
    std::string plus_file, minus_file;
    std::string plus2_file, minus2_file;
    std::string order = "lex";
    std::string special;
    double tolerance = 1e-8;
    bool homogeneous = false;
    long k = 0;
};

std::pair<std::optional<CurveType>, std::optional<int>> special_selector(const std::string& s) {
    if (s.empty()) return {std::nullopt, std::nullopt};
    if (s == "hyperelliptic") return {CurveType::hyperelliptic, std::nullopt};
    if (s == "picard") return {CurveType::picard, std::nullopt};
    if (s.rfind("superelliptic", 0) == 0) {
        std::string rest = s.substr(std::string("superelliptic").size());
        if (!rest.empty() && rest[0] == ':') rest = rest.substr(1);
        require(!rest.empty(), "--special superelliptic:<m> needs the exponent");
        return {CurveType::superelliptic, std::stoi(rest)};
    }
    throw validation_error("unknown --special value: " + s);
}

Session load_session(const Options& opt) {
    require(!opt.curve_file.empty(), "missing --curve <file>");
    auto [type, m] = special_selector(opt.special);
    return load_curve_file(opt.curve_file, type, m);
}

MonomialOrder display_order(const Options& opt, const Universe& u) {
    if (opt.order == "lex") return default_lex(u);
    if (opt.order == "grlex") return default_grlex(u);
    if (opt.order.rfind("weighted:", 0) == 0) {
        auto rest = opt.order.substr(9);
        auto comma = rest.find(',');
        require(comma != std::string::npos, "--order weighted:<wx>,<wy>");
        long wx = std::stol(rest.substr(0, comma));
        long wy = std::stol(rest.substr(comma + 1));
        require(u.contains(Var::X) && u.contains(Var::Y) && u.size() == 2,
                "weighted display orders apply to affine x,y ideals");
        return MonomialOrder::weighted({Var::Y, Var::X}, {wy, wx});
    }
    throw validation_error("unknown --order value: " + opt.order);
}

void print_ideal(const Ideal& I, const MonomialOrder& ord) {
    for (auto& g : I.groebner_basis(ord)) std::cout << g.to_string(ord) << "\n";
}

// reduced-divisor output for general curves: t, alpha, then the canonical
// basis (affine z-chart unless the divisor reaches z = 0 or --homogeneous)
void print_element(const Options& opt, const JacobianElement& E) {
    std::cout << "t = " << E.t() << "\n";
    std::cout << "alpha = " << E.alpha() << "\n";
    if (E.is_identity()) {
        std::cout << "identity (t=0)\n";
        return;
    }
    const auto& I = E.ideal();
    if (opt.homogeneous || I.has_infinite_support() || I.delta_included()) {
        print_ideal(I.ideal(), display_order(opt, Universe::projective()));
    } else {
        Ideal affine = ideal_sum(I.affine_z(),
                                 Ideal(Universe::affine_xy(), I.curve()->field(),
                                       {I.curve()->affine_z()}));
        print_ideal(affine, display_order(opt, Universe::affine_xy()));
    }
}

JacobianElement reduce_from_files(const Session& session, const std::string& plus_file,
                                  const std::string& minus_file) {
    DivisorSpec plus =
        plus_file.empty() ? DivisorSpec::points({}) : load_divisor_file(session, plus_file);
    DivisorSpec minus =
        minus_file.empty() ? DivisorSpec::points({}) : load_divisor_file(session, minus_file);
    return reduce_divisors(session.curve, plus, minus);
}

Ideal special_reduce_from_files(const Session& session, const std::string& plus_file,
                                const std::string& minus_file) {
    const Universe axy = Universe::affine_xy();
    Ideal plus = plus_file.empty() ? Ideal::unit(axy, session.field)
                                   : load_affine_divisor_file(session, plus_file);
    Ideal minus = minus_file.empty() ? Ideal::unit(axy, session.field)
                                     : load_affine_divisor_file(session, minus_file);
    if (session.type == CurveType::hyperelliptic) return he_reduce(*session.hyperelliptic, plus, minus);
    return pc_reduce(*session.superelliptic, plus, minus);
}

int cmd_info(const Options& opt) {
    Session s = load_session(opt);
    if (s.type == CurveType::general) {
        std::cout << "n=" << s.curve->degree() << " genus=" << s.curve->genus();
        if (s.curve->is_nodal())
            std::cout << " nodes=" << s.curve->node_count();
        else
            std::cout << " smooth";
        std::cout << "\n";
        std::cout << "field = " << s.field.to_string() << "\n";
        std::cout << "base_point = " << s.curve->base_point().to_string() << "\n";
        for (auto& nd : s.curve->nodes()) std::cout << "node " << nd.location.to_string() << "\n";
        auto [k, l] = s.curve->fixed_monomial();
        std::cout << "fixed_monomial = (" << k << "," << l << ")\n";
        std::cout << "valid\n";
    } else {
        const char* names[] = {"general", "hyperelliptic", "picard", "superelliptic"};
        int genus = s.hyperelliptic ? s.hyperelliptic->genus() : s.superelliptic->genus();
        std::cout << names[static_cast<int>(s.type)] << " genus=" << genus << "\n";
        std::cout << "field = " << s.field.to_string() << "\n";
        std::cout << "base_point = infinity\n";
        std::cout << "valid\n";
    }
    return 0;
}

int cmd_reduce(const Options& opt) {
    Session s = load_session(opt);
    if (s.type != CurveType::general) {
        Ideal red = special_reduce_from_files(s, opt.plus_file, opt.minus_file);
        if (red.is_unit()) {
            std::cout << "identity (t=0)\n";
            return 0;
        }
        const auto& ord = s.hyperelliptic ? s.hyperelliptic->order() : s.superelliptic->order();
        print_ideal(red, ord);
        return 0;
    }
    print_element(opt, reduce_from_files(s, opt.plus_file, opt.minus_file));
    return 0;
}

int cmd_neg(const Options& opt) {
    Session s = load_session(opt);
    require(s.type == CurveType::general, "neg runs on general curves; negate by swapping plus/minus");
    print_element(opt, neg(reduce_from_files(s, opt.plus_file, opt.minus_file)));
    return 0;
}

int cmd_add(const Options& opt) {
    Session s = load_session(opt);
    require(s.type == CurveType::general, "add runs on general curves");
    JacobianElement a = reduce_from_files(s, opt.plus_file, opt.minus_file);
    JacobianElement b = reduce_from_files(s, opt.plus2_file, opt.minus2_file);
    print_element(opt, add(a, b));
    return 0;
}

int cmd_mul(const Options& opt) {
    Session s = load_session(opt);
    require(s.type == CurveType::general, "mul runs on general curves");
    print_element(opt, scalar_mul(opt.k, reduce_from_files(s, opt.plus_file, opt.minus_file)));
    return 0;
}

int cmd_equal(const Options& opt) {
    Session s = load_session(opt);
    require(s.type == CurveType::general, "equal runs on general curves");
    JacobianElement a = reduce_from_files(s, opt.plus_file, opt.minus_file);
    JacobianElement b = reduce_from_files(s, opt.plus2_file, opt.minus2_file);
    std::cout << (equal(a, b) ? "equal" : "not equal") << "\n";
    return 0;
}

int cmd_points(const Options& opt) {
    Session s = load_session(opt);
    require(s.type == CurveType::general, "points runs on general curves");
    JacobianElement E = reduce_from_files(s, opt.plus_file, opt.minus_file);
    std::cout << format_points(divisor_points(E.ideal(), opt.tolerance));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact divisor class arithmetic on plane curves"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool two_operands = false) {
        sub->add_option("--curve", opt.curve_file, "curve description file")->required();
        sub->add_option("--plus", opt.plus_file, "effective divisor file (positive part)");
        sub->add_option("--minus", opt.minus_file, "effective divisor file (negative part)");
        if (two_operands) {
            sub->add_option("--plus2", opt.plus2_file, "second operand, positive part");
            sub->add_option("--minus2", opt.minus2_file, "second operand, negative part");
        }
        sub->add_option("--order", opt.order, "output order: lex | grlex | weighted:<wx>,<wy>");
        sub->add_option("--special", opt.special,
                        "hyperelliptic | picard | superelliptic:<m> fast path");
        sub->add_flag("--homogeneous", opt.homogeneous, "print the homogeneous ideal");
    };

    auto* info = app.add_subcommand("info", "validate and describe a curve");
    info->add_option("--curve", opt.curve_file)->required();
    info->add_option("--special", opt.special);

    add_common(app.add_subcommand("reduce", "reduce a divisor class"));
    add_common(app.add_subcommand("neg", "negate a divisor class"));
    add_common(app.add_subcommand("add", "add two divisor classes"), true);
    auto* mul = app.add_subcommand("mul", "integer multiple of a divisor class");
    mul->add_option("k", opt.k, "multiplier")->required();
    add_common(mul);
    add_common(app.add_subcommand("equal", "compare two divisor classes"), true);
    auto* points = app.add_subcommand("points", "numeric divisor points (Q only)");
    add_common(points);
    points->add_option("--tolerance", opt.tolerance, "root matching tolerance");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("info")) return cmd_info(opt);
        if (app.got_subcommand("reduce")) return cmd_reduce(opt);
        if (app.got_subcommand("neg")) return cmd_neg(opt);
        if (app.got_subcommand("add")) return cmd_add(opt);
        if (app.got_subcommand("mul")) return cmd_mul(opt);
        if (app.got_subcommand("equal")) return cmd_equal(opt);
        if (app.got_subcommand("points")) return cmd_points(opt);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const jacplane::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const jacplane::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
