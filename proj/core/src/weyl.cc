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

#include "ldmbqc/weyl/weyl.h"

#include <stdexcept>

#include "ldmbqc/errors.h"
#include "ldmbqc/field/modulus.h"

namespace ldmbqc::weyl {

using field::reduce_mod;

std::uint32_t tau_to_zeta(std::int64_t t, std::uint32_t d) {
    const std::uint64_t two_d = 2ull * d;
    const std::uint64_t tr = reduce_mod(t, two_d);
    if (d % 2 == 0) {
        return static_cast<std::uint32_t>(tr);
    }
    return static_cast<std::uint32_t>(tr * (d + 1) % two_d);
}

std::uint32_t zeta_to_tau(std::uint32_t j, std::uint32_t d) {
    j %= 2 * d;
    if (d % 2 == 0) {
        return j;
    }
    if (j % 2 != 0) {
        throw PhaseDomainError("zeta^" + std::to_string(j) + " is not a power of tau for d=" + std::to_string(d));
    }
    return j % d;
}

std::optional<std::uint32_t> zeta_to_omega(std::uint32_t j, std::uint32_t d) {
    j %= 2 * d;
    if (j % 2 != 0) {
        return std::nullopt;
    }
    return (j / 2) % d;
}

WeylLabel WeylLabel::make(std::uint32_t d, std::int64_t a, std::int64_t b, std::int64_t tau_exp) {
    return WeylLabel{d,
                     {static_cast<std::uint32_t>(reduce_mod(a, d)), static_cast<std::uint32_t>(reduce_mod(b, d))},
                     static_cast<std::uint32_t>(reduce_mod(tau_exp, 2ull * d))};
}

std::uint32_t symplectic_product(std::uint32_t d, const Vec2 &v, const Vec2 &w) {
    const std::int64_t s = static_cast<std::int64_t>(v[0]) * w[1] - static_cast<std::int64_t>(v[1]) * w[0];
    return static_cast<std::uint32_t>(reduce_mod(s, d));
}

std::uint32_t commutation_phase(const WeylLabel &v, const WeylLabel &w) {
    if (v.d != w.d) {
        throw DimensionMismatch("commutation_phase: labels over Z_" + std::to_string(v.d) + " and Z_" +
                                std::to_string(w.d));
    }
    return symplectic_product(v.d, v.v, w.v);
}

Vec2 SymplecticMatrix::apply(const Vec2 &v) const {
    const std::uint64_t a = (static_cast<std::uint64_t>(m[0][0]) * v[0] + static_cast<std::uint64_t>(m[0][1]) * v[1]) % d;
    const std::uint64_t b = (static_cast<std::uint64_t>(m[1][0]) * v[0] + static_cast<std::uint64_t>(m[1][1]) * v[1]) % d;
    return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix &other) const {
    SymplecticMatrix out{d, {}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            std::uint64_t s = 0;
            for (int k = 0; k < 2; ++k) {
                s += static_cast<std::uint64_t>(m[i][k]) * other.m[k][j];
            }
            out.m[i][j] = static_cast<std::uint32_t>(s % d);
        }
    }
    return out;
}

SymplecticMatrix SymplecticMatrix::pow(std::uint64_t e) const {
    SymplecticMatrix result = identity(d);
    SymplecticMatrix base = *this;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool check_symplectic(const std::array<std::array<std::uint32_t, 2>, 2> &C, std::uint32_t d) {
    // For 2x2 matrices C^T sigma C = det(C) sigma.
    const std::int64_t det =
        static_cast<std::int64_t>(C[0][0]) * C[1][1] - static_cast<std::int64_t>(C[0][1]) * C[1][0];
    return reduce_mod(det, d) == 1 % d;
}

CliffordSpec clifford_s(std::uint32_t d) {
    CliffordSpec V;
    V.C = SymplecticMatrix{d, {{{1, 1 % d}, {0, 1}}}};
    V.C.m[0][0] %= d;
    V.C.m[1][1] %= d;
    V.named = CliffordSpec::Named::S;
    return V;
}

CliffordSpec clifford_mu(std::uint32_t d, std::uint32_t u) {
    auto inv = field::inverse_mod(u % d, d);
    if (!inv) {
        throw std::invalid_argument("M_u needs a unit u; " + std::to_string(u) + " is not invertible mod " +
                                    std::to_string(d));
    }
    CliffordSpec V;
    V.C = SymplecticMatrix{d, {{{static_cast<std::uint32_t>(*inv), 0}, {0, u % d}}}};
    V.named = CliffordSpec::Named::Mu;
    V.u = u % d;
    return V;
}

CliffordSpec clifford_displacement(std::uint32_t d, const Vec2 &x) {
    CliffordSpec V;
    V.C = SymplecticMatrix::identity(d);
    V.x = {x[0] % d, x[1] % d};
    return V;
}

CliffordSpec clifford_explicit(std::uint32_t d, const std::array<std::array<std::uint32_t, 2>, 2> &C, const Vec2 &x,
                               std::uint32_t tau_exp) {
    std::array<std::array<std::uint32_t, 2>, 2> reduced{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            reduced[i][j] = C[i][j] % d;
        }
    }
    if (!check_symplectic(reduced, d)) {
        throw std::invalid_argument("matrix is not symplectic mod " + std::to_string(d));
    }
    CliffordSpec V;
    V.C = SymplecticMatrix{d, reduced};
    V.x = {x[0] % d, x[1] % d};
    V.tau_exp = tau_exp % (2 * d);
    return V;
}

CliffordSpec named_clifford(const std::string &name, std::uint32_t d, std::uint32_t u, const Vec2 &x) {
    if (name == "S") {
        return clifford_s(d);
    }
    if (name == "Mu") {
        return clifford_mu(d, u);
    }
    if (name == "W") {
        return clifford_displacement(d, x);
    }
    throw std::invalid_argument("unknown named Clifford '" + name + "'");
}

Conjugated conjugate_weyl(const CliffordSpec &V, const Vec2 &v, std::uint64_t f) {
    const std::uint32_t d = V.d();
    Vec2 cur{v[0] % d, v[1] % d};
    std::uint64_t phase = 0;
    for (std::uint64_t k = 0; k < f; ++k) {
        phase += symplectic_product(d, V.x, cur);
        cur = V.C.apply(cur);
    }
    return Conjugated{static_cast<std::uint32_t>(phase % d), cur};
}

}  // namespace ldmbqc::weyl
