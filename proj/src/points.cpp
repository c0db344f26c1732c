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

#include "jacplane/points.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jacplane/univariate.hpp"

namespace jacplane {

namespace {

using cplx = std::complex<double>;

double coeff_to_double(const Scalar& s) { return s.rational().get_d(); }

// dense double coefficients of a univariate polynomial
std::vector<double> dense_coeffs(const Polynomial& p, Var v) {
    std::vector<double> c(p.degree_in(v) + 1, 0.0);
    for (auto& t : p.terms()) c[t.mono.exponent(v)] = coeff_to_double(t.coeff);
    return c;
}

cplx eval_dense(const std::vector<double>& c, cplx z) {
    cplx r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

// Durand-Kerner on a squarefree polynomial.
std::vector<cplx> durand_kerner(const std::vector<double>& coeffs) {
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n <= 0) return {};
    std::vector<double> monic(coeffs);
    for (auto& c : monic) c /= coeffs.back();
    std::vector<cplx> z(n);
    for (int i = 0; i < n; ++i) z[i] = std::polar(1.0 + 0.1 * i, 0.4 + 2.0 * M_PI * i / n);
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            cplx denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            cplx delta = eval_dense(monic, z[i]) / denom;
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return z;
}

// Yun squarefree decomposition over Q: p = prod f_i^i.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p, Var v) {
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial a = uv_monic(p, v);
    Polynomial da = a.derivative(v);
    Polynomial g = uv_gcd(a, da, v);
    if (g.is_constant()) {
        out.push_back({a, 1});
        return out;
    }
    Polynomial w = uv_divmod(a, g, v).first;
    Polynomial y = uv_divmod(da, g, v).first;
    int i = 1;
    while (!w.is_constant()) {
        Polynomial z = y - w.derivative(v);
        Polynomial f = uv_gcd(w, z, v);
        if (!f.is_constant()) out.push_back({f, i});
        w = uv_divmod(w, f, v).first;
        y = uv_divmod(z, f, v).first;
        ++i;
    }
    return out;
}

}  // namespace

std::vector<std::pair<cplx, int>> numeric_roots(const Polynomial& p, Var v) {
    std::vector<std::pair<cplx, int>> out;
    if (p.is_zero() || p.degree_in(v) == 0) return out;
    for (auto& [factor, mult] : squarefree_decomposition(p, v)) {
        for (auto z : durand_kerner(dense_coeffs(factor, v))) out.push_back({z, mult});
    }
    return out;
}

std::vector<NumericPoint> divisor_points(const HomogeneousDivisorIdeal& I, double tolerance) {
    const CurvePtr& curve = I.curve();
    const Field f = curve->field();
    require(f.is_rational(), "numeric points are available over Q only");
    const Universe axy = Universe::affine_xy();
    std::vector<NumericPoint> out;

    // finite part: the z-chart ideal, with the adjoint divisor removed once
    Ideal A = ideal_sum(I.affine_z(), Ideal(axy, f, {curve->affine_z()}));
    if (I.delta_included()) A = ideal_quotient(A, curve->adjoint_affine_z());

    if (!A.is_unit()) {
        auto lexXY = MonomialOrder::lex({Var::X, Var::Y});
        const auto& gb = A.groebner_basis(lexXY);
        // the eliminant in y is the unique basis element free of x
        std::optional<Polynomial> elim;
        for (auto& g : gb)
            if (g.degree_in(Var::X) == 0) elim = g;
        check_internal(elim.has_value(), "zero-dimensional ideal without a y-eliminant");

        auto yroots = numeric_roots(*elim, Var::Y);
        // evaluate the remaining generators at each y-root and match x
        for (auto& [y0, mult] : yroots) {
            std::vector<cplx> candidates;
            for (auto& g : gb) {
                if (g.degree_in(Var::X) == 0) continue;
                // coefficients in x, evaluated at y = y0
                std::vector<cplx> cx(g.degree_in(Var::X) + 1, 0.0);
                for (auto& t : g.terms())
                    cx[t.mono.exponent(Var::X)] +=
                        coeff_to_double(t.coeff) * std::pow(y0, t.mono.exponent(Var::Y));
                if (g.degree_in(Var::X) == 1) {
                    candidates = {-cx[0] / cx[1]};
                    break;
                }
            }
            if (candidates.empty()) {
                // fall back to the x-eliminant and residual filtering
                auto lexYX = MonomialOrder::lex({Var::Y, Var::X});
                const auto& gbx = A.groebner_basis(lexYX);
                for (auto& g : gbx) {
                    if (g.degree_in(Var::Y) != 0) continue;
                    for (auto& [x0, mx] : numeric_roots(g, Var::X)) {
                        bool ok = true;
                        for (auto& h : gb) {
                            cplx val = 0;
                            for (auto& t : h.terms())
                                val += coeff_to_double(t.coeff) * std::pow(x0, t.mono.exponent(Var::X)) *
                                       std::pow(y0, t.mono.exponent(Var::Y));
                            ok = ok && std::abs(val) < tolerance * 1e3;
                        }
                        if (ok) candidates.push_back(x0);
                    }
                }
            }
            for (auto x0 : candidates) {
                NumericPoint pt;
                pt.x = x0;
                pt.y = y0;
                pt.multiplicity = candidates.size() == 1 ? mult : 1;
                out.push_back(pt);
            }
        }
    }

    // infinite part: set z = 0 in the x = 1 chart
    Ideal K = ideal_sum(I.affine_x(), Ideal(Universe::chart_yz(), f, {curve->affine_x()}));
    if (!K.is_unit() && I.has_infinite_support()) {
        Ideal K0 = ideal_sum(K, Ideal(Universe::chart_yz(), f,
                                      {Polynomial::variable(Universe::chart_yz(), f, Var::Z)}));
        if (!K0.is_unit()) {
            auto lexZY = MonomialOrder::lex({Var::Z, Var::Y});
            std::optional<Polynomial> elim;
            for (auto& g : K0.groebner_basis(lexZY))
                if (g.degree_in(Var::Z) == 0) elim = g;
            if (elim && elim->degree_in(Var::Y) > 0) {
                for (auto& [y0, mult] : numeric_roots(*elim, Var::Y)) {
                    NumericPoint pt;
                    pt.x = 1.0;
                    pt.y = y0;
                    pt.infinite = true;
                    pt.multiplicity = mult;
                    out.push_back(pt);
                }
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const NumericPoint& a, const NumericPoint& b) {
        if (a.infinite != b.infinite) return !a.infinite;
        auto key = [](const NumericPoint& p) {
            return std::make_tuple(std::round(p.x.real() * 1e6), std::round(p.x.imag() * 1e6),
                                   std::round(p.y.real() * 1e6), std::round(p.y.imag() * 1e6));
        };
        return key(a) < key(b);
    });
    return out;
}

std::string format_points(const std::vector<NumericPoint>& pts) {
    std::ostringstream os;
    auto coord = [&](cplx c) {
        std::ostringstream s;
        s.setf(std::ios::fixed);
        s.precision(5);
        double re = std::abs(c.real()) < 5e-6 ? 0.0 : c.real();  // avoid -0.00000
        double im = c.imag();
        if (std::abs(im) < 5e-6) {
            s << re;
        } else {
            s << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
        }
        return s.str();
    };
    for (auto& p : pts) {
        if (p.infinite)
            os << "(1, " << coord(p.y) << ", 0)";
        else
            os << "(" << coord(p.x) << ", " << coord(p.y) << ", 1)";
        if (p.multiplicity > 1) os << " (mult " << p.multiplicity << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace jacplane
