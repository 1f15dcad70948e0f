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

#ifndef LDMBQC_MBQC_PLAN_H
#define LDMBQC_MBQC_PLAN_H

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "ldmbqc/rational.h"
#include "ldmbqc/state/monomial.h"
#include "ldmbqc/state/sparse_state.h"
#include "ldmbqc/weyl/weyl.h"

namespace ldmbqc::mbqc {

using state::Ket;
using Matrix = std::vector<std::vector<std::uint32_t>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);

struct Outcome {
    Ket m;
    Rational p;
    bool operator==(const Outcome &) const = default;
};

/// An abstract correlated resource: joint setting vector -> distribution of joint outcomes.
struct TableResource {
    std::uint32_t d = 2;
    std::uint32_t N = 0;
    std::map<Ket, std::vector<Outcome>> behavior;

    /// Throws PlanError when q has no entry.
    const std::vector<Outcome> &distribution(const Ket &q) const;
    bool operator==(const TableResource &) const = default;
};

using Resource = std::variant<state::SparseState, TableResource>;

struct Party {
    weyl::WeylLabel fiducial;
    weyl::CliffordSpec control;
    bool operator==(const Party &) const = default;
};

/// An ld-MBQC instance.
///
/// Settings: q = T m + Q i + q0. Output: o = z . m + s0. All arithmetic mod d.
/// T must be strictly lower triangular, so parties can be processed in index order.
struct MbqcPlan {
    std::uint32_t d = 2;
    std::uint32_t n = 0;
    std::uint32_t N = 0;
    Resource resource;
    std::vector<Party> parties;
    Matrix Q;
    Matrix T;
    std::vector<std::uint32_t> q0;
    std::vector<std::uint32_t> z;
    std::uint32_t s0 = 0;

    /// Checks every structural invariant; throws PlanError naming the offending field.
    void validate() const;

    bool is_flat() const;
    bool has_table_resource() const {
        return std::holds_alternative<TableResource>(resource);
    }
    const state::SparseState &sparse() const {
        return std::get<state::SparseState>(resource);
    }
    const TableResource &table() const {
        return std::get<TableResource>(resource);
    }

    /// q_k from the input and the outcomes of parties 0..k-1 (later entries ignored).
    std::uint32_t setting(std::uint32_t k, const Ket &input, const Ket &outcomes) const;
    /// All settings of a flat plan.
    Ket flat_settings(const Ket &input) const;
    std::uint32_t output(const Ket &outcomes) const;

    /// M_k(q) = V^q F V^{-q} as a monomial matrix.
    state::MonomialMatrix local_observable(std::uint32_t k, std::uint32_t q) const;
    /// The same operator built from dense Clifford matrices.
    Eigen::MatrixXcd dense_local_observable(std::uint32_t k, std::uint32_t q) const;

    bool operator==(const MbqcPlan &) const = default;
};

}  // namespace ldmbqc::mbqc

#endif
