// Copyright 2026 The ldmbqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LDMBQC_FIELD_LINALG_H
#define LDMBQC_FIELD_LINALG_H

#include <cstdint>
#include <optional>
#include <vector>

#include "ldmbqc/field/modulus.h"

namespace ldmbqc::field {

/// Row-major dense matrix of canonical representatives.
using IntMatrix = std::vector<std::vector<std::uint64_t>>;

/// Solves A x = b over Z_m for any m >= 2.
///
/// Splits m into prime powers, eliminates over each Z_{p^e} pivoting on an
/// entry of minimal p-adic valuation, and recombines with the CRT. Returns one
/// solution (free variables set to zero) or nullopt when none exists.
std::optional<std::vector<std::uint64_t>> solve_mod(const IntMatrix &A, const std::vector<std::uint64_t> &b,
                                                    std::uint64_t m);

/// Row-reduced basis of the span of `vectors` over a field.
std::vector<std::vector<Element>> row_basis(const Modulus &field, std::vector<std::vector<Element>> vectors);

/// Rank of a set of vectors over a field.
std::size_t rank(const Modulus &field, std::vector<std::vector<Element>> vectors);

}  // namespace ldmbqc::field

#endif
