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

#include "ldmbqc/weyl/dense.h"

#include <cmath>
#include <numbers>

#include "ldmbqc/errors.h"
#include "ldmbqc/field/modulus.h"

namespace ldmbqc::weyl {

cplx zeta_power(std::int64_t j, std::uint32_t d) {
    const auto r = field::reduce_mod(j, 2ull * d);
    return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / d);
}

Eigen::MatrixXcd weyl_matrix(std::uint32_t d, const Vec2 &v, std::uint32_t tau_exp) {
    Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(d, d);
    for (std::uint32_t z = 0; z < d; ++z) {
        Z(z, z) = zeta_power(2ll * z, d);
        X((z + 1) % d, z) = 1.0;
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(d, d);
    for (std::uint32_t k = 0; k < v[0]; ++k) {
        out = out * Z;
    }
    for (std::uint32_t k = 0; k < v[1]; ++k) {
        out = out * X;
    }
    const std::int64_t tau_total = static_cast<std::int64_t>(tau_exp) - static_cast<std::int64_t>(v[0]) * v[1];
    return zeta_power(tau_to_zeta(tau_total, d), d) * out;
}

Eigen::MatrixXcd clifford_matrix(const CliffordSpec &V) {
    const std::uint32_t d = V.d();
    const Eigen::MatrixXcd A = weyl_matrix(d, V.C.apply({1, 0}));
    const Eigen::MatrixXcd B = weyl_matrix(d, V.C.apply({0, 1}));
    // Projector onto the +1 eigenspace of A; take its best-conditioned column.
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd Ak = Eigen::MatrixXcd::Identity(d, d);
    for (std::uint32_t k = 0; k < d; ++k) {
        P += Ak;
        Ak = Ak * A;
    }
    P /= static_cast<double>(d);
    Eigen::Index best = 0;
    P.colwise().norm().maxCoeff(&best);
    Eigen::VectorXcd phi = P.col(best);
    if (phi.norm() < 1e-9) {
        throw PhaseDomainError("image of Z has no +1 eigenvector; C does not lift to a Clifford");
    }
    phi.normalize();
    Eigen::MatrixXcd U(d, d);
    Eigen::VectorXcd col = phi;
    for (std::uint32_t z = 0; z < d; ++z) {
        U.col(z) = col;
        col = B * col;
    }
    return zeta_power(tau_to_zeta(V.tau_exp, d), d) * U * weyl_matrix(d, V.x);
}

std::optional<std::uint32_t> snap_to_omega(cplx z, std::uint32_t d, double tol) {
    std::uint32_t best = 0;
    double best_dist = std::abs(z - zeta_power(0, d));
    for (std::uint32_t k = 1; k < d; ++k) {
        double dist = std::abs(z - zeta_power(2ll * k, d));
        if (dist < best_dist) {
            best = k;
            best_dist = dist;
        }
    }
    if (best_dist > tol) {
        return std::nullopt;
    }
    return best;
}

std::optional<std::uint32_t> proportional_phase(const Eigen::MatrixXcd &A, const Eigen::MatrixXcd &B, std::uint32_t d,
                                                double tol) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
        throw DimensionMismatch("proportional_phase: shapes differ");
    }
    Eigen::Index r = 0, c = 0;
    B.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(B(r, c)) < tol) {
        return std::nullopt;
    }
    // Snap loosely, then demand the entry-wise match at the tight tolerance.
    auto k = snap_to_omega(A(r, c) / B(r, c), d, 0.5);
    if (!k) {
        return std::nullopt;
    }
    const cplx w = zeta_power(2ll * *k, d);
    if ((A - w * B).cwiseAbs().maxCoeff() > tol) {
        return std::nullopt;
    }
    return k;
}

}  // namespace ldmbqc::weyl
