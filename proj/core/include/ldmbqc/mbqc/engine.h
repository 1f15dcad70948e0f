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

#ifndef LDMBQC_MBQC_ENGINE_H
#define LDMBQC_MBQC_ENGINE_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ldmbqc/field/poly.h"
#include "ldmbqc/mbqc/plan.h"
#include "ldmbqc/state/monomial.h"

namespace ldmbqc::mbqc {

struct RunTrace {
    Ket input;
    Ket settings;
    Ket outcomes;
    std::uint32_t output = 0;
};

/// One execution: parties in index order, outcomes sampled with the given seed.
RunTrace run(const MbqcPlan &plan, const Ket &input, std::uint64_t seed);

/// Exact distribution of the output o for one input, ascending in o.
///
/// Enumerates measurement branches party by party; GuardExceeded beyond
/// `max_branches` leaves.
std::vector<std::pair<std::uint32_t, Rational>> output_distribution(const MbqcPlan &plan, const Ket &input,
                                                                    std::size_t max_branches = 1u << 20);

/// The global observable prod_k M_k(q_k)^{z_k} of a flat plan for one input.
state::GlobalObservable weighted_global_observable(const MbqcPlan &plan, const Ket &input);

struct OutputFunction {
    field::FunctionTable table;
    std::optional<field::MultiPoly> poly;  // set when d is prime
};

/// o(i) for every input, analytically.
///
/// Flat plans on a state resource use the eigenvalue equation of the weighted
/// global observable; other plans use exact branch enumeration. Throws
/// NotDeterministic if some input has a random output.
OutputFunction extract_output_function(const MbqcPlan &plan);

/// Dense cross-check of extract_output_function for flat plans on a state resource.
/// Local observables come from dense Clifford matrices, not from the phase formula.
field::FunctionTable extract_output_function_dense(const MbqcPlan &plan);

/// True iff every input has a point-mass output distribution.
bool is_deterministic(const MbqcPlan &plan);

/// Edges j -> k whenever q_k depends on m_j (T[k][j] != 0).
struct TemporalGraph {
    std::uint32_t num_vertices = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

TemporalGraph temporal_graph(const MbqcPlan &plan);

/// Vertices on the longest directed path (1 for a graph without edges, 0 when empty).
/// Throws CycleError if the graph is cyclic.
std::uint32_t longest_path(const TemporalGraph &graph);

struct SuccessEstimate {
    Rational p_S;      // worst case over inputs
    Rational p_bar_S;  // average over inputs
    bool exact = true;
};

/// Success probabilities against a target table; exact unless `force_sampling`
/// is set or branch enumeration exceeds its guard.
SuccessEstimate empirical_success(const MbqcPlan &plan, const field::FunctionTable &target, std::uint64_t trials,
                                  std::uint64_t seed, bool force_sampling = false);

}  // namespace ldmbqc::mbqc

#endif
