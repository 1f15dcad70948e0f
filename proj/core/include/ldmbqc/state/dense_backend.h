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

#ifndef LDMBQC_STATE_DENSE_BACKEND_H
#define LDMBQC_STATE_DENSE_BACKEND_H

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "ldmbqc/state/monomial.h"
#include "ldmbqc/state/sparse_state.h"

namespace ldmbqc::state {

inline constexpr double kDenseTolerance = 1e-9;
inline constexpr double kDenseAlarm = 1e-6;
inline constexpr std::size_t kDenseMaxAmplitudes = 1000000;

/// Amplitude vector; basis index is the ket read as a base-d number, site 0 most significant.
Eigen::VectorXcd to_dense(const SparseState &psi);

/// Applies a d x d matrix at one site of a dense N-site vector.
Eigen::VectorXcd apply_local(const Eigen::VectorXcd &psi, std::uint32_t d, std::uint32_t N, std::uint32_t site,
                             const Eigen::MatrixXcd &op);

/// o with M psi = omega^o psi, snapped to the nearest d-th root.
///
/// Residual <= tolerance: eigenvector. Residual > kDenseAlarm: not an eigenvector.
/// Anything in between raises InconsistencyAlarm.
std::optional<std::uint32_t> dense_eigenphase(const Eigen::VectorXcd &psi, const Eigen::VectorXcd &m_psi,
                                              std::uint32_t d, double tolerance = kDenseTolerance);

/// Dense cross-check of eigenphase_of. Throws GuardExceeded when d^N > 10^6.
std::optional<std::uint32_t> dense_oracle(const GlobalObservable &M, const SparseState &psi,
                                          double tolerance = kDenseTolerance);

/// Same, with arbitrary dense single-site operators.
std::optional<std::uint32_t> dense_oracle(const std::vector<Eigen::MatrixXcd> &sites, const SparseState &psi,
                                          double tolerance = kDenseTolerance);

}  // namespace ldmbqc::state

#endif
