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

#include "ldmbqc/state/dense_backend.h"

#include <cmath>

#include "ldmbqc/errors.h"
#include "ldmbqc/weyl/dense.h"

namespace ldmbqc::state {

namespace {

std::size_t dense_dimension(std::uint32_t d, std::uint32_t N) {
    std::size_t dim = 1;
    for (std::uint32_t k = 0; k < N; ++k) {
        if (dim > kDenseMaxAmplitudes / d) {
            throw GuardExceeded("dense backend: " + std::to_string(d) + "^" + std::to_string(N) +
                                " amplitudes exceed the 10^6 limit");
        }
        dim *= d;
    }
    return dim;
}

}  // namespace

Eigen::VectorXcd to_dense(const SparseState &psi) {
    const std::size_t dim = dense_dimension(psi.d(), psi.num_sites());
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    const double norm = 1.0 / std::sqrt(static_cast<double>(psi.num_terms()));
    for (const auto &t : psi.terms()) {
        std::size_t idx = 0;
        for (auto z : t.ket) {
            idx = idx * psi.d() + z;
        }
        v(static_cast<Eigen::Index>(idx)) = norm * weyl::zeta_power(t.zeta_exp, psi.d());
    }
    return v;
}

Eigen::VectorXcd apply_local(const Eigen::VectorXcd &psi, std::uint32_t d, std::uint32_t N, std::uint32_t site,
                             const Eigen::MatrixXcd &op) {
    if (op.rows() != d || op.cols() != d) {
        throw DimensionMismatch("local operator must be d x d");
    }
    std::size_t stride = 1;
    for (std::uint32_t k = site + 1; k < N; ++k) {
        stride *= d;
    }
    const auto dim = static_cast<std::size_t>(psi.size());
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
    for (std::size_t idx = 0; idx < dim; ++idx) {
        const std::size_t digit = (idx / stride) % d;
        const std::size_t base = idx - digit * stride;
        const auto amp = psi(static_cast<Eigen::Index>(idx));
        if (amp == std::complex<double>(0.0, 0.0)) {
            continue;
        }
        for (std::uint32_t r = 0; r < d; ++r) {
            out(static_cast<Eigen::Index>(base + r * stride)) += op(r, static_cast<Eigen::Index>(digit)) * amp;
        }
    }
    return out;
}

std::optional<std::uint32_t> dense_eigenphase(const Eigen::VectorXcd &psi, const Eigen::VectorXcd &m_psi,
                                              std::uint32_t d, double tolerance) {
    Eigen::Index best = 0;
    psi.cwiseAbs().maxCoeff(&best);
    const auto lambda = m_psi(best) / psi(best);
    std::uint32_t o = 0;
    double best_dist = std::abs(lambda - weyl::zeta_power(0, d));
    for (std::uint32_t j = 1; j < d; ++j) {
        const double dist = std::abs(lambda - weyl::zeta_power(2ll * j, d));
        if (dist < best_dist) {
            best_dist = dist;
            o = j;
        }
    }
    const double residual = (m_psi - weyl::zeta_power(2ll * o, d) * psi).norm();
    if (residual <= tolerance) {
        return o;
    }
    if (residual <= kDenseAlarm) {
        throw InconsistencyAlarm("dense residual " + std::to_string(residual) +
                                 " is between the eigenvector tolerance and the alarm threshold");
    }
    return std::nullopt;
}

std::optional<std::uint32_t> dense_oracle(const GlobalObservable &M, const SparseState &psi, double tolerance) {
    std::vector<Eigen::MatrixXcd> sites;
    sites.reserve(M.num_sites());
    for (const auto &s : M.sites()) {
        sites.push_back(s.dense());
    }
    return dense_oracle(sites, psi, tolerance);
}

std::optional<std::uint32_t> dense_oracle(const std::vector<Eigen::MatrixXcd> &sites, const SparseState &psi,
                                          double tolerance) {
    if (sites.size() != psi.num_sites()) {
        throw DimensionMismatch("dense observable site count differs from the state's");
    }
    const Eigen::VectorXcd v = to_dense(psi);
    Eigen::VectorXcd w = v;
    for (std::uint32_t k = 0; k < psi.num_sites(); ++k) {
        w = apply_local(w, psi.d(), psi.num_sites(), k, sites[k]);
    }
    return dense_eigenphase(v, w, psi.d(), tolerance);
}

}  // namespace ldmbqc::state
