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

#ifndef LDMBQC_WEYL_DENSE_H
#define LDMBQC_WEYL_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>

#include "ldmbqc/weyl/weyl.h"

namespace ldmbqc::weyl {

using cplx = std::complex<double>;

/// exp(i pi j / d).
cplx zeta_power(std::int64_t j, std::uint32_t d);

/// Dense d x d matrix of tau^{tau_exp} W_{a,b}.
Eigen::MatrixXcd weyl_matrix(std::uint32_t d, const Vec2 &v, std::uint32_t tau_exp = 0);

/// Dense unitary realising V, built from its conjugation action alone.
///
/// U is fixed (up to a global phase) by U Z U^dag = W_{C e1} and
/// U X U^dag = W_{C e2}; V = tau^{tau_exp} U W_x.
Eigen::MatrixXcd clifford_matrix(const CliffordSpec &V);

/// k in 0..d-1 minimising |z - omega^k|, if that distance is at most tol.
std::optional<std::uint32_t> snap_to_omega(cplx z, std::uint32_t d, double tol);

/// omega-exponent p with A = omega^p B entry-wise within tol, if one exists.
std::optional<std::uint32_t> proportional_phase(const Eigen::MatrixXcd &A, const Eigen::MatrixXcd &B, std::uint32_t d,
                                                double tol);

}  // namespace ldmbqc::weyl

#endif
