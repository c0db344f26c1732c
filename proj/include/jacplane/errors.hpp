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

#ifndef JACPLANE_ERRORS_HPP
#define JACPLANE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jacplane {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: malformed files, points off the curve, field mismatches.
struct validation_error : error {
    explicit validation_error(const std::string& what) : error(what) {}
};

/// A broken internal invariant. Seeing one of these is a bug.
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw validation_error(what);
}

inline void check_internal(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

}  // namespace jacplane

#endif
