/**************************************************************************
 * conway.hpp
 *
 * Copyright 2026 The skewcc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace skewcc {

/// Built-in Conway polynomials (coefficients low-to-high, monic).
///
/// Each entry is the standard Conway polynomial: the minimal monic primitive
/// polynomial of degree m over F_p, compatible with the polynomials of all
/// proper subfield degrees, under the usual sign-alternating word ordering.
/// Computer algebra systems use these as the default modulus for F_{p^m},
/// which makes element coordinates comparable across tools.
struct ConwayEntry {
    int64_t p;
    int m;
    std::vector<uint32_t> coeffs;
};

inline const std::vector<ConwayEntry>& conway_table() {
    static const std::vector<ConwayEntry> table = {
        {3, 1, {1, 1}},
        {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},
        {5, 1, {3, 1}},
        {5, 2, {2, 4, 1}},
        {5, 3, {3, 3, 0, 1}},
        {5, 4, {2, 4, 4, 0, 1}},
        {5, 5, {3, 4, 0, 0, 0, 1}},
        {7, 1, {4, 1}},
        {7, 2, {3, 6, 1}},
        {7, 3, {4, 0, 6, 1}},
        {7, 4, {3, 4, 5, 0, 1}},
        {7, 7, {4, 6, 0, 0, 0, 0, 0, 1}},
        {11, 1, {9, 1}},
        {11, 2, {2, 7, 1}},
        {13, 1, {11, 1}},
        {13, 2, {2, 12, 1}},
    };
    return table;
}

inline std::optional<std::vector<uint32_t>> conway_polynomial(int64_t p, int m) {
    for (const auto& e : conway_table())
        if (e.p == p && e.m == m) return e.coeffs;
    // Degree 1 always available: x - r for the least primitive root r would
    // need a primality scan; callers construct it through FieldParams when the
    // table has no entry, so only tabulated fields are returned here.
    return std::nullopt;
}

}  // namespace skewcc
