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

#ifndef LDMBQC_WEYL_WEYL_H
#define LDMBQC_WEYL_WEYL_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace ldmbqc::weyl {

/// A vector (a, b) in Z_d^2: a is the Z-part, b the X-part.
using Vec2 = std::array<std::uint32_t, 2>;

// Phases are tracked as exponents of zeta = exp(i pi / d), an element of Z_{2d}.
// tau = zeta for even d and tau = zeta^{d+1} for odd d, so tau^2 = omega = zeta^2
// in both cases.

/// zeta-exponent of tau^t.
std::uint32_t tau_to_zeta(std::int64_t t, std::uint32_t d);

/// tau-exponent equal to zeta^j. Throws PhaseDomainError for odd d and odd j.
std::uint32_t zeta_to_tau(std::uint32_t j, std::uint32_t d);

/// omega-exponent equal to zeta^j, if j is even.
std::optional<std::uint32_t> zeta_to_omega(std::uint32_t j, std::uint32_t d);

/// The Weyl operator tau^{tau_exp} W_{a,b} with W_{a,b} = tau^{-ab} Z^a X^b.
struct WeylLabel {
    std::uint32_t d = 2;
    Vec2 v{0, 0};
    std::uint32_t tau_exp = 0;

    static WeylLabel make(std::uint32_t d, std::int64_t a, std::int64_t b, std::int64_t tau_exp = 0);
    static WeylLabel z(std::uint32_t d) {
        return make(d, 1, 0);
    }
    static WeylLabel x(std::uint32_t d) {
        return make(d, 0, 1);
    }
    bool operator==(const WeylLabel &) const = default;
};

/// [v, w] = a_v b_w - b_v a_w mod d.
std::uint32_t symplectic_product(std::uint32_t d, const Vec2 &v, const Vec2 &w);

/// k with W_v W_w = omega^k W_w W_v. Throws DimensionMismatch for different d.
std::uint32_t commutation_phase(const WeylLabel &v, const WeylLabel &w);

/// Single-site symplectic matrix acting on column vectors (a, b).
struct SymplecticMatrix {
    std::uint32_t d = 2;
    std::array<std::array<std::uint32_t, 2>, 2> m{{{1, 0}, {0, 1}}};

    static SymplecticMatrix identity(std::uint32_t d) {
        return SymplecticMatrix{d, {{{1, 0}, {0, 1}}}};
    }
    Vec2 apply(const Vec2 &v) const;
    SymplecticMatrix operator*(const SymplecticMatrix &other) const;
    SymplecticMatrix pow(std::uint64_t e) const;
    bool operator==(const SymplecticMatrix &) const = default;
};

/// C^T sigma C == sigma mod d, sigma = [[0,1],[-1,0]].
bool check_symplectic(const std::array<std::array<std::uint32_t, 2>, 2> &C, std::uint32_t d);

/// The Clifford V = tau^{tau_exp} U W_x where U conjugates W_v to W_{Cv}.
struct CliffordSpec {
    enum class Named { None, S, Mu };

    SymplecticMatrix C;
    Vec2 x{0, 0};
    std::uint32_t tau_exp = 0;
    Named named = Named::None;
    std::uint32_t u = 0;

    std::uint32_t d() const {
        return C.d;
    }
    bool operator==(const CliffordSpec &) const = default;
};

/// S = sum_z tau^{z^2} |z><z|: C = [[1,1],[0,1]].
CliffordSpec clifford_s(std::uint32_t d);
/// M_u = sum_k |uk><k|: C = diag(u^{-1}, u). Throws std::invalid_argument unless u is a unit.
CliffordSpec clifford_mu(std::uint32_t d, std::uint32_t u);
/// The Weyl displacement W_x: identity symplectic part.
CliffordSpec clifford_displacement(std::uint32_t d, const Vec2 &x);
/// Explicit (C, x, tau_exp). Throws std::invalid_argument if C is not symplectic.
CliffordSpec clifford_explicit(std::uint32_t d, const std::array<std::array<std::uint32_t, 2>, 2> &C, const Vec2 &x,
                               std::uint32_t tau_exp = 0);
/// Named constructor by string: "S", "Mu" (with u) or "W" (displacement x).
CliffordSpec named_clifford(const std::string &name, std::uint32_t d, std::uint32_t u = 1, const Vec2 &x = {0, 0});

struct Conjugated {
    std::uint32_t omega_exp = 0;
    Vec2 label{0, 0};
};

/// V^f W_v V^{-f} = omega^{omega_exp} W_{label}, using
/// omega_exp = sum_{k=0}^{f-1} [x, C^k v] and label = C^f v.
Conjugated conjugate_weyl(const CliffordSpec &V, const Vec2 &v, std::uint64_t f);

}  // namespace ldmbqc::weyl

#endif
