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

#include "ldmbqc/state/cyclotomic.h"

#include <stdexcept>

namespace ldmbqc::state {

namespace {

// Exact quotient of a by monic b over Z.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t> &b) {
    const std::size_t db = b.size() - 1;
    std::vector<std::int64_t> q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const std::int64_t c = a[i];
        q[i - db] = c;
        for (std::size_t k = 0; k <= db; ++k) {
            a[i - db + k] -= c * b[k];
        }
    }
    for (auto r : a) {
        if (r != 0) {
            throw std::logic_error("cyclotomic division left a remainder");
        }
    }
    return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
    if (n == 0) {
        throw std::invalid_argument("cyclotomic polynomial index must be positive");
    }
    // x^n - 1 divided by Phi_k for every proper divisor k of n.
    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::uint32_t k = 1; k < n; ++k) {
        if (n % k == 0) {
            poly = divide_exact(std::move(poly), cyclotomic_polynomial(k));
        }
    }
    return poly;
}

ZetaReducer::ZetaReducer(std::uint32_t d) : d_(d), phi_(cyclotomic_polynomial(2 * d)) {
    powers_.reserve(2 * d);
    for (std::uint32_t j = 0; j < 2 * d; ++j) {
        std::vector<std::int64_t> mono(j + 1, 0);
        mono[j] = 1;
        powers_.push_back(reduce(std::move(mono)));
    }
}

std::vector<std::int64_t> ZetaReducer::reduce(std::vector<std::int64_t> coeffs) const {
    const std::size_t deg = phi_.size() - 1;
    for (std::size_t i = coeffs.size(); i-- > deg;) {
        const std::int64_t c = coeffs[i];
        if (c == 0) {
            continue;
        }
        for (std::size_t k = 0; k <= deg; ++k) {
            coeffs[i - deg + k] -= c * phi_[k];
        }
    }
    coeffs.resize(deg, 0);
    return coeffs;
}

std::optional<std::pair<std::int64_t, std::uint32_t>> ZetaReducer::as_scaled_power(
    const std::vector<std::int64_t> &reduced) const {
    for (std::uint32_t j = 0; j < 2 * d_; ++j) {
        const auto &p = powers_[j];
        // Find the scale from the first nonzero coordinate of zeta^j.
        std::size_t lead = 0;
        while (lead < p.size() && p[lead] == 0) {
            ++lead;
        }
        if (lead == p.size() || reduced[lead] % p[lead] != 0) {
            continue;
        }
        const std::int64_t c = reduced[lead] / p[lead];
        if (c <= 0) {
            continue;
        }
        bool match = true;
        for (std::size_t k = 0; k < p.size() && match; ++k) {
            match = reduced[k] == c * p[k];
        }
        if (match) {
            return std::make_pair(c, j);
        }
    }
    return std::nullopt;
}

}  // namespace ldmbqc::state
