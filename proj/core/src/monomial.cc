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

#include "ldmbqc/state/monomial.h"

#include "ldmbqc/errors.h"
#include "ldmbqc/weyl/dense.h"

namespace ldmbqc::state {

MonomialMatrix MonomialMatrix::identity(std::uint32_t d) {
    MonomialMatrix m;
    m.d_ = d;
    m.perm_.resize(d);
    m.phase_.assign(d, 0);
    for (std::uint32_t z = 0; z < d; ++z) {
        m.perm_[z] = z;
    }
    return m;
}

MonomialMatrix MonomialMatrix::weyl_zeta(std::uint32_t d, const weyl::Vec2 &v, std::uint32_t zeta_exp) {
    // tau^{-ab} Z^a X^b |z> = tau^{-ab} omega^{a(z+b)} |z+b>.
    const std::uint32_t a = v[0] % d, b = v[1] % d;
    const std::uint64_t two_d = 2ull * d;
    const std::uint64_t base = (weyl::tau_to_zeta(-static_cast<std::int64_t>(a) * b, d) + zeta_exp) % two_d;
    MonomialMatrix m;
    m.d_ = d;
    m.perm_.resize(d);
    m.phase_.resize(d);
    for (std::uint32_t z = 0; z < d; ++z) {
        const std::uint32_t target = (z + b) % d;
        m.perm_[z] = target;
        m.phase_[z] = static_cast<std::uint32_t>((base + 2ull * a * target) % two_d);
    }
    return m;
}

MonomialMatrix MonomialMatrix::weyl(std::uint32_t d, const weyl::Vec2 &v, std::uint32_t tau_exp) {
    return weyl_zeta(d, v, weyl::tau_to_zeta(tau_exp, d));
}

MonomialMatrix MonomialMatrix::from_parts(std::uint32_t d, std::vector<std::uint32_t> perm,
                                          std::vector<std::uint32_t> phase) {
    if (perm.size() != d || phase.size() != d) {
        throw DimensionMismatch("monomial matrix parts must have length d=" + std::to_string(d));
    }
    std::vector<bool> seen(d, false);
    for (auto t : perm) {
        if (t >= d || seen[t]) {
            throw std::invalid_argument("monomial matrix permutation is not a bijection");
        }
        seen[t] = true;
    }
    MonomialMatrix m;
    m.d_ = d;
    m.perm_ = std::move(perm);
    m.phase_ = std::move(phase);
    for (auto &p : m.phase_) {
        p %= 2 * d;
    }
    return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix &other) const {
    if (d_ != other.d_) {
        throw DimensionMismatch("monomial matrices of different dimension");
    }
    MonomialMatrix m;
    m.d_ = d_;
    m.perm_.resize(d_);
    m.phase_.resize(d_);
    for (std::uint32_t z = 0; z < d_; ++z) {
        const std::uint32_t mid = other.perm_[z];
        m.perm_[z] = perm_[mid];
        m.phase_[z] = (other.phase_[z] + phase_[mid]) % (2 * d_);
    }
    return m;
}

MonomialMatrix MonomialMatrix::pow(std::uint64_t e) const {
    MonomialMatrix result = identity(d_);
    MonomialMatrix base = *this;
    while (e > 0) {
        if (e & 1) {
            result = base * result;
        }
        base = base * base;
        e >>= 1;
    }
    return result;
}

MonomialMatrix MonomialMatrix::times_zeta(std::uint32_t zeta_exp) const {
    MonomialMatrix m = *this;
    for (auto &p : m.phase_) {
        p = (p + zeta_exp) % (2 * d_);
    }
    return m;
}

bool MonomialMatrix::is_identity() const {
    for (std::uint32_t z = 0; z < d_; ++z) {
        if (perm_[z] != z || phase_[z] != 0) {
            return false;
        }
    }
    return true;
}

bool MonomialMatrix::has_omega_spectrum() const {
    return pow(d_).is_identity();
}

Eigen::MatrixXcd MonomialMatrix::dense() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d_, d_);
    for (std::uint32_t z = 0; z < d_; ++z) {
        m(perm_[z], z) = weyl::zeta_power(phase_[z], d_);
    }
    return m;
}

GlobalObservable::GlobalObservable(std::vector<MonomialMatrix> sites) : sites_(std::move(sites)) {
    for (std::size_t k = 0; k < sites_.size(); ++k) {
        if (sites_[k].d() != sites_[0].d()) {
            throw DimensionMismatch("global observable mixes local dimensions");
        }
        if (!sites_[k].has_omega_spectrum()) {
            throw PhaseDomainError("site " + std::to_string(k) +
                                   " observable has eigenvalues outside the d-th roots of unity");
        }
    }
}

}  // namespace ldmbqc::state
