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

#ifndef JACPLANE_PARSE_HPP
#define JACPLANE_PARSE_HPP

#include <string>

#include "jacplane/polynomial.hpp"

namespace jacplane {

/// Parse the polynomial text grammar: integer or rational coefficients,
/// optional `*`, `^` for powers, variables x y z (t reserved), parentheses
/// allowed, whitespace ignored. Examples: "x^4 + y^4 - 2*z^4", "1/3 x y^2".
/// Every variable that occurs must lie in `u`.
Polynomial parse_polynomial(const std::string& text, Universe u, Field f);

}  // namespace jacplane

#endif
