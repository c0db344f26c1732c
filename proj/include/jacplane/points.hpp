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

// Numeric extraction of divisor points for display. Floating point lives
// only here; nothing computed in this module flows back into the algebra.

#ifndef JACPLANE_POINTS_HPP
#define JACPLANE_POINTS_HPP

#include <complex>

#include "jacplane/divisor.hpp"

namespace jacplane {

struct NumericPoint {
    std::complex<double> x, y;  // (x : y : 1) when finite, (1 : y : 0) at infinity
    bool infinite = false;
    int multiplicity = 1;
};

/// Approximate the points of a divisor ideal over Q: eliminate to univariate
/// polynomials, root-find numerically (Durand-Kerner on exact squarefree
/// parts), back-substitute. Refuses prime fields.
std::vector<NumericPoint> divisor_points(const HomogeneousDivisorIdeal& I, double tolerance = 1e-8);

/// Roots of a univariate rational polynomial, with multiplicities from the
/// exact squarefree decomposition.
std::vector<std::pair<std::complex<double>, int>> numeric_roots(const Polynomial& p, Var v);

/// Fixed 5-decimal rendering, points sorted deterministically.
std::string format_points(const std::vector<NumericPoint>& pts);

}  // namespace jacplane

#endif
