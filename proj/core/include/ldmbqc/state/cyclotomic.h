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

#ifndef LDMBQC_STATE_CYCLOTOMIC_H
#define LDMBQC_STATE_CYCLOTOMIC_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ldmbqc::state {

/// Integer coefficients of the n-th cyclotomic polynomial, low to high.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n);

/// Exact arithmetic in Z[zeta], zeta = exp(i pi / d), via reduction modulo Phi_{2d}.
class ZetaReducer {
   public:
    explicit ZetaReducer(std::uint32_t d);

    /// Canonical form of sum_j c_j zeta^j (any length), of length deg Phi_{2d}.
    std::vector<std::int64_t> reduce(std::vector<std::int64_t> coeffs) const;

    /// (c, j) with c > 0 and value == c zeta^j, if the element has that form.
    std::optional<std::pair<std::int64_t, std::uint32_t>> as_scaled_power(const std::vector<std::int64_t> &reduced) const;

   private:
    std::uint32_t d_;
    std::vector<std::int64_t> phi_;
    std::vector<std::vector<std::int64_t>> powers_;  // reduce(zeta^j), j in 0..2d-1
};

}  // namespace ldmbqc::state

#endif
