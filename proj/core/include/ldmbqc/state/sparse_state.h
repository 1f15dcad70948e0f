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

#ifndef LDMBQC_STATE_SPARSE_STATE_H
#define LDMBQC_STATE_SPARSE_STATE_H

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ldmbqc/rational.h"
#include "ldmbqc/state/monomial.h"

namespace ldmbqc::state {

using Ket = std::vector<std::uint32_t>;

struct Term {
    std::uint32_t zeta_exp = 0;  // amplitude phase zeta^{zeta_exp}
    Ket ket;
    bool operator==(const Term &) const = default;
};

/// (1/sqrt(K)) sum_t zeta^{phase_t} |ket_t> with K distinct kets.
class SparseState {
   public:
    SparseState() = default;
    /// Sorts by ket; throws on duplicate kets, out-of-range digits or wrong lengths.
    SparseState(std::uint32_t d, std::uint32_t N, std::vector<Term> terms);

    /// Builds from tau-exponents as used in plan files.
    static SparseState from_tau_terms(std::uint32_t d, std::uint32_t N,
                                      const std::vector<std::pair<std::uint32_t, Ket>> &terms);

    std::uint32_t d() const {
        return d_;
    }
    std::uint32_t num_sites() const {
        return N_;
    }
    std::size_t num_terms() const {
        return terms_.size();
    }
    const std::vector<Term> &terms() const {
        return terms_;
    }
    /// tau-exponent of term t. Throws PhaseDomainError if the phase is not a tau power.
    std::uint32_t tau_exp(std::size_t t) const;
    /// True if the state equals `other` up to a global phase.
    bool equal_up_to_phase(const SparseState &other) const;

    bool operator==(const SparseState &) const = default;

   private:
    std::uint32_t d_ = 2;
    std::uint32_t N_ = 0;
    std::vector<Term> terms_;
};

/// sum_z |z>^{N} / sqrt(d), or (|001> - |110>)/sqrt(2) when anders_browne is set (d=2, N=3).
SparseState make_ghz(std::uint32_t d, std::uint32_t N, bool anders_browne = false);

/// (1/sqrt(d)) sum_z |z,z,z+1,z+1,...,z+d-1,z+d-1>, odd d >= 3.
SparseState make_example2_state(std::uint32_t d);

SparseState make_basis_state(std::uint32_t d, const Ket &ket);

/// M |psi>; same term count.
SparseState apply_observable(const GlobalObservable &M, const SparseState &psi);

/// o with M|psi> = omega^o |psi>, or nullopt if psi is not an eigenvector.
/// Throws PhaseDomainError if psi is an eigenvector with a non-omega eigenvalue.
std::optional<std::uint32_t> eigenphase_of(const GlobalObservable &M, const SparseState &psi);

struct Branch {
    std::uint32_t outcome = 0;
    Rational probability;
    SparseState post;
};

/// Every outcome of measuring M at `site` with nonzero probability, ascending.
///
/// Exact: projectors are expanded in Z[zeta]. Throws Error if a post-measurement
/// state leaves the equal-magnitude form.
std::vector<Branch> outcome_branches(const SparseState &psi, std::uint32_t site, const MonomialMatrix &M);

/// Samples one branch with its Born probability.
std::pair<std::uint32_t, SparseState> measure_local(const SparseState &psi, std::uint32_t site,
                                                    const MonomialMatrix &M, std::mt19937_64 &rng);
std::pair<std::uint32_t, SparseState> measure_local(const SparseState &psi, std::uint32_t site,
                                                    const MonomialMatrix &M, std::uint64_t seed);

/// Draws an index from exact rational weights summing to 1.
std::size_t sample_index(const std::vector<Rational> &probabilities, std::mt19937_64 &rng);

}  // namespace ldmbqc::state

#endif
