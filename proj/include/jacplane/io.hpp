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

// Text formats shared by the command line and test fixtures.
//
// Curve files:
//   field = Q | Fp <p>
//   curve = x^4 + y^4 - 2*z^4        (affine in x, y for the special types)
//   nodes = [(0,0,1), ...]           (optional)
//   base_point = (1,1,1)             (general curves)
//   fixed_monomial = (k,l)           (optional)
//   type = hyperelliptic | picard | superelliptic <m>   (optional)
// '#' starts a comment.
//
// Divisor files: either lines
//   point (x,y,z) [mult m] [branch +|-]
// or a raw ideal
//   ideal { <poly>; <poly>; ... }
// with an optional `delta = true|false` for raw ideals on nodal curves.
// Special-curve divisors use affine points (x,y) and affine ideals.

#ifndef JACPLANE_IO_HPP
#define JACPLANE_IO_HPP

#include <optional>
#include <string>
#include <variant>

#include "jacplane/jacobian.hpp"
#include "jacplane/special.hpp"

namespace jacplane {

enum class CurveType { general, hyperelliptic, picard, superelliptic };

/// A loaded curve: the validated general model, or one of the fast-path
/// standard forms.
struct Session {
    Field field;
    CurveType type = CurveType::general;
    CurvePtr curve;  // general curves
    std::optional<HyperellipticCurve> hyperelliptic;
    std::optional<SuperellipticCurve> superelliptic;
};

Session parse_curve_text(const std::string& text, std::optional<CurveType> type_override = std::nullopt,
                         std::optional<int> superelliptic_m = std::nullopt);
Session load_curve_file(const std::string& path, std::optional<CurveType> type_override = std::nullopt,
                        std::optional<int> superelliptic_m = std::nullopt);

/// Divisor input for a general-curve session.
DivisorSpec parse_divisor_text(const Session& session, const std::string& text);
DivisorSpec load_divisor_file(const Session& session, const std::string& path);

/// Divisor input for a special-curve session: an affine ideal in k[x, y].
Ideal parse_affine_divisor_text(const Session& session, const std::string& text);
Ideal load_affine_divisor_file(const Session& session, const std::string& path);

std::string read_file(const std::string& path);

}  // namespace jacplane

#endif
