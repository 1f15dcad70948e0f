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

#ifndef LDMBQC_STATE_MONOMIAL_H
#define LDMBQC_STATE_MONOMIAL_H

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "ldmbqc/weyl/weyl.h"

namespace ldmbqc::state {

/// A d x d generalized permutation matrix whose entries are powers of zeta.
///
/// M |z> = zeta^{phase[z]} |perm[z]>.
class MonomialMatrix {
   public:
    static MonomialMatrix identity(std::uint32_t d);
    /// tau^{tau_exp} W_{a,b}.
    static MonomialMatrix weyl(std::uint32_t d, const weyl::Vec2 &v, std::uint32_t tau_exp = 0);
    /// zeta^{zeta_exp} W_{a,b}.
    static MonomialMatrix weyl_zeta(std::uint32_t d, const weyl::Vec2 &v, std::uint32_t zeta_exp);
    static MonomialMatrix from_parts(std::uint32_t d, std::vector<std::uint32_t> perm, std::vector<std::uint32_t> phase);

    std::uint32_t d() const {
        return d_;
    }
    const std::vector<std::uint32_t> &perm() const {
        return perm_;
    }
    const std::vector<std::uint32_t> &phase() const {
        return phase_;
    }

    /// (zeta-exponent, image ket) of M|z>.
    std::pair<std::uint32_t, std::uint32_t> apply(std::uint32_t z) const {
        return {phase_[z], perm_[z]};
    }

    /// this * other (other acts first).
    MonomialMatrix operator*(const MonomialMatrix &other) const;
    MonomialMatrix pow(std::uint64_t e) const;
    MonomialMatrix times_zeta(std::uint32_t zeta_exp) const;
    bool is_identity() const;
    /// True iff M^d = I, i.e. the spectrum lies in the d-th roots of unity.
    bool has_omega_spectrum() const;

    Eigen::MatrixXcd dense() const;

    bool operator==(const MonomialMatrix &) const = default;

   private:
    std::uint32_t d_ = 2;
    std::vector<std::uint32_t> perm_;
    std::vector<std::uint32_t> phase_;
};

/// Tensor product of per-site monomial matrices. Construction rejects any site
/// whose d-th power is not the identity (PhaseDomainError).
class GlobalObservable {
   public:
    explicit GlobalObservable(std::vector<MonomialMatrix> sites);

    std::uint32_t d() const {
        return sites_.empty() ? 0 : sites_[0].d();
    }
    std::size_t num_sites() const {
        return sites_.size();
    }
    const std::vector<MonomialMatrix> &sites() const {
        return sites_;
    }
    const MonomialMatrix &site(std::size_t k) const {
        return sites_.at(k);
    }

   private:
    std::vector<MonomialMatrix> sites_;
};

}  // namespace ldmbqc::state

#endif
