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

#include "ldmbqc/field/linalg.h"

#include <numeric>

#include "ldmbqc/errors.h"

namespace ldmbqc::field {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

std::uint32_t valuation(u64 x, u64 p, std::uint32_t cap) {
    if (x == 0) {
        return cap;
    }
    std::uint32_t v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::optional<std::vector<u64>> solve_prime_power(IntMatrix A, std::vector<u64> b, u64 p, std::uint32_t e) {
    u64 q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
    }
    const std::size_t rows = A.size();
    const std::size_t cols = rows == 0 ? 0 : A[0].size();
    for (auto &row : A) {
        for (auto &x : row) {
            x %= q;
        }
    }
    for (auto &x : b) {
        x %= q;
    }
    std::vector<std::size_t> col_of(cols);
    std::iota(col_of.begin(), col_of.end(), 0);
    std::vector<std::uint32_t> pivot_val;

    std::size_t r = 0;
    for (; r < rows && r < cols; ++r) {
        std::uint32_t best = e;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = r; i < rows && best > 0; ++i) {
            for (std::size_t j = r; j < cols; ++j) {
                std::uint32_t v = valuation(A[i][j], p, e);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0) {
                        break;
                    }
                }
            }
        }
        if (best == e) {
            break;
        }
        std::swap(A[r], A[bi]);
        std::swap(b[r], b[bi]);
        if (bj != r) {
            for (auto &row : A) {
                std::swap(row[r], row[bj]);
            }
            std::swap(col_of[r], col_of[bj]);
        }
        u64 pv = 1;
        for (std::uint32_t i = 0; i < best; ++i) {
            pv *= p;
        }
        // Normalise the pivot to exactly p^best.
        u64 unit = A[r][r] / pv;
        u64 unit_inv = *inverse_mod(unit % q, q);
        for (auto &x : A[r]) {
            x = mulmod(x, unit_inv, q);
        }
        b[r] = mulmod(b[r], unit_inv, q);
        // Only rows below: entries above may have smaller valuation than pv.
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (A[i][r] == 0) {
                continue;
            }
            u64 t = A[i][r] / pv;
            for (std::size_t j = 0; j < cols; ++j) {
                A[i][j] = (A[i][j] + q - mulmod(t, A[r][j], q)) % q;
            }
            b[i] = (b[i] + q - mulmod(t, b[r], q)) % q;
        }
        pivot_val.push_back(best);
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (b[i] != 0) {
            return std::nullopt;
        }
    }
    // Every entry of pivot row i has valuation >= pivot_val[i], so divisibility
    // of b[i] decides solvability and free variables may be fixed at zero.
    std::vector<u64> y(cols, 0);
    for (std::size_t i = r; i-- > 0;) {
        u64 pv = 1;
        for (std::uint32_t k = 0; k < pivot_val[i]; ++k) {
            pv *= p;
        }
        if (b[i] % pv != 0) {
            return std::nullopt;
        }
        u64 acc = b[i];
        for (std::size_t j = i + 1; j < cols; ++j) {
            acc = (acc + q - mulmod(A[i][j], y[j], q)) % q;
        }
        y[i] = acc / pv;
    }
    std::vector<u64> x(cols, 0);
    for (std::size_t j = 0; j < cols; ++j) {
        x[col_of[j]] = y[j];
    }
    return x;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> solve_mod(const IntMatrix &A, const std::vector<std::uint64_t> &b,
                                                    std::uint64_t m) {
    if (A.size() != b.size()) {
        throw DimensionMismatch("solve_mod: matrix has " + std::to_string(A.size()) + " rows but rhs has " +
                                std::to_string(b.size()));
    }
    const std::size_t cols = A.empty() ? 0 : A[0].size();
    std::vector<u64> result(cols, 0);
    u64 modulus_so_far = 1;
    for (auto [p, e] : factorize(m)) {
        auto part = solve_prime_power(A, b, p, e);
        if (!part) {
            return std::nullopt;
        }
        u64 q = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            q *= p;
        }
        // x = result + modulus_so_far * t, with x = part mod q.
        u64 inv = *inverse_mod(modulus_so_far % q, q);
        for (std::size_t j = 0; j < cols; ++j) {
            u64 diff = ((*part)[j] + q - result[j] % q) % q;
            u64 t = mulmod(diff, inv, q);
            result[j] += modulus_so_far * t;
        }
        modulus_so_far *= q;
    }
    return result;
}

std::vector<std::vector<Element>> row_basis(const Modulus &field, std::vector<std::vector<Element>> vectors) {
    if (!field.is_field()) {
        throw UnsupportedModulus("row_basis requires a field, got " + field.describe());
    }
    if (vectors.empty()) {
        return {};
    }
    const std::size_t cols = vectors[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < vectors.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < vectors.size() && vectors[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == vectors.size()) {
            continue;
        }
        std::swap(vectors[r], vectors[pivot]);
        Element inv = *field.inverse(vectors[r][c]);
        for (auto &x : vectors[r]) {
            x = field.mul(x, inv);
        }
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (i == r || vectors[i][c] == 0) {
                continue;
            }
            Element t = vectors[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                vectors[i][j] = field.sub(vectors[i][j], field.mul(t, vectors[r][j]));
            }
        }
        ++r;
    }
    vectors.resize(r);
    return vectors;
}

std::size_t rank(const Modulus &field, std::vector<std::vector<Element>> vectors) {
    return row_basis(field, std::move(vectors)).size();
}

}  // namespace ldmbqc::field
