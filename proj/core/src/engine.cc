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

#include "ldmbqc/mbqc/engine.h"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "ldmbqc/errors.h"
#include "ldmbqc/state/dense_backend.h"
#include "ldmbqc/state/sparse_state.h"

namespace ldmbqc::mbqc {

namespace {

std::string format_ket(const Ket &k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        s += (i ? "," : "") + std::to_string(k[i]);
    }
    return s + ")";
}

void check_input(const MbqcPlan &plan, const Ket &input) {
    if (input.size() != plan.n) {
        throw DimensionMismatch("input " + format_ket(input) + " has length " + std::to_string(input.size()) +
                                ", plan expects n=" + std::to_string(plan.n));
    }
    for (auto x : input) {
        if (x >= plan.d) {
            throw std::invalid_argument("input entry " + std::to_string(x) + " is not reduced mod " +
                                        std::to_string(plan.d));
        }
    }
}

}  // namespace

RunTrace run(const MbqcPlan &plan, const Ket &input, std::uint64_t seed) {
    plan.validate();
    check_input(plan, input);
    std::mt19937_64 rng(seed);
    RunTrace trace{input, Ket(plan.N, 0), Ket(plan.N, 0), 0};
    if (plan.has_table_resource()) {
        trace.settings = plan.flat_settings(input);
        const auto &dist = plan.table().distribution(trace.settings);
        std::vector<Rational> probs;
        for (const auto &o : dist) {
            probs.push_back(o.p);
        }
        trace.outcomes = dist[state::sample_index(probs, rng)].m;
    } else {
        state::SparseState psi = plan.sparse();
        for (std::uint32_t k = 0; k < plan.N; ++k) {
            trace.settings[k] = plan.setting(k, input, trace.outcomes);
            auto [m, post] = state::measure_local(psi, k, plan.local_observable(k, trace.settings[k]), rng);
            trace.outcomes[k] = m;
            psi = std::move(post);
        }
    }
    trace.output = plan.output(trace.outcomes);
    return trace;
}

std::vector<std::pair<std::uint32_t, Rational>> output_distribution(const MbqcPlan &plan, const Ket &input,
                                                                    std::size_t max_branches) {
    plan.validate();
    check_input(plan, input);
    std::map<std::uint32_t, Rational> acc;
    if (plan.has_table_resource()) {
        for (const auto &o : plan.table().distribution(plan.flat_settings(input))) {
            if (o.p != 0) {
                acc[plan.output(o.m)] += o.p;
            }
        }
    } else {
        std::size_t leaves = 0;
        Ket outcomes(plan.N, 0);
        std::function<void(std::uint32_t, const state::SparseState &, const Rational &)> rec =
            [&](std::uint32_t k, const state::SparseState &psi, const Rational &prob) {
                if (k == plan.N) {
                    if (++leaves > max_branches) {
                        throw GuardExceeded("output distribution needs more than " + std::to_string(max_branches) +
                                            " measurement branches");
                    }
                    acc[plan.output(outcomes)] += prob;
                    return;
                }
                const std::uint32_t q = plan.setting(k, input, outcomes);
                for (const auto &b : state::outcome_branches(psi, k, plan.local_observable(k, q))) {
                    outcomes[k] = b.outcome;
                    rec(k + 1, b.post, prob * b.probability);
                }
                outcomes[k] = 0;
            };
        rec(0, plan.sparse(), Rational(1));
    }
    return {acc.begin(), acc.end()};
}

state::GlobalObservable weighted_global_observable(const MbqcPlan &plan, const Ket &input) {
    std::vector<state::MonomialMatrix> sites;
    sites.reserve(plan.N);
    const Ket q = plan.flat_settings(input);
    for (std::uint32_t k = 0; k < plan.N; ++k) {
        sites.push_back(plan.local_observable(k, q[k]).pow(plan.z[k]));
    }
    return state::GlobalObservable(std::move(sites));
}

OutputFunction extract_output_function(const MbqcPlan &plan) {
    plan.validate();
    const auto mod = field::Modulus::make(plan.d);
    const std::size_t size = field::table_size(plan.d, plan.n);
    field::FunctionTable table{mod, plan.n, std::vector<field::Element>(size, 0)};
    const bool analytic = !plan.has_table_resource() && plan.is_flat();
    for (std::size_t idx = 0; idx < size; ++idx) {
        const auto input = table.point(idx);
        if (analytic) {
            auto eig = state::eigenphase_of(weighted_global_observable(plan, input), plan.sparse());
            if (!eig) {
                throw NotDeterministic("output at input " + format_ket(input) +
                                       " depends on measurement outcomes; use empirical_success");
            }
            table.values[idx] = (*eig + plan.s0) % plan.d;
        } else {
            auto dist = output_distribution(plan, input);
            if (dist.size() != 1) {
                throw NotDeterministic("output at input " + format_ket(input) +
                                       " is random; use empirical_success");
            }
            table.values[idx] = dist[0].first;
        }
    }
    OutputFunction out{table, std::nullopt};
    if (mod.kind() == field::Modulus::Kind::PrimeField) {
        out.poly = field::interpolate(table);
    }
    return out;
}

field::FunctionTable extract_output_function_dense(const MbqcPlan &plan) {
    plan.validate();
    if (plan.has_table_resource() || !plan.is_flat()) {
        throw std::invalid_argument("dense extraction needs a flat plan on a state resource");
    }
    const auto mod = field::Modulus::make(plan.d);
    const std::size_t size = field::table_size(plan.d, plan.n);
    field::FunctionTable table{mod, plan.n, std::vector<field::Element>(size, 0)};
    for (std::size_t idx = 0; idx < size; ++idx) {
        const auto input = table.point(idx);
        const Ket q = plan.flat_settings(input);
        std::vector<Eigen::MatrixXcd> sites;
        for (std::uint32_t k = 0; k < plan.N; ++k) {
            const Eigen::MatrixXcd M = plan.dense_local_observable(k, q[k]);
            Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(plan.d, plan.d);
            for (std::uint32_t e = 0; e < plan.z[k]; ++e) {
                P = M * P;
            }
            sites.push_back(std::move(P));
        }
        auto eig = state::dense_oracle(sites, plan.sparse());
        if (!eig) {
            throw NotDeterministic("dense backend: resource is not an eigenvector at input " + format_ket(input));
        }
        table.values[idx] = (*eig + plan.s0) % plan.d;
    }
    return table;
}

bool is_deterministic(const MbqcPlan &plan) {
    try {
        extract_output_function(plan);
        return true;
    } catch (const NotDeterministic &) {
        return false;
    }
}

TemporalGraph temporal_graph(const MbqcPlan &plan) {
    TemporalGraph g{plan.N, {}};
    for (std::uint32_t k = 0; k < plan.N && k < plan.T.size(); ++k) {
        for (std::uint32_t j = 0; j < plan.N && j < plan.T[k].size(); ++j) {
            if (plan.T[k][j] % plan.d != 0) {
                g.edges.emplace_back(j, k);
            }
        }
    }
    return g;
}

std::uint32_t longest_path(const TemporalGraph &graph) {
    const std::uint32_t V = graph.num_vertices;
    std::vector<std::vector<std::uint32_t>> out(V);
    std::vector<std::uint32_t> indeg(V, 0);
    for (auto [a, b] : graph.edges) {
        out.at(a).push_back(b);
        ++indeg.at(b);
    }
    std::vector<std::uint32_t> ready, length(V, 1);
    for (std::uint32_t v = 0; v < V; ++v) {
        if (indeg[v] == 0) {
            ready.push_back(v);
        }
    }
    std::uint32_t visited = 0, best = 0;
    while (!ready.empty()) {
        const std::uint32_t v = ready.back();
        ready.pop_back();
        ++visited;
        best = std::max(best, length[v]);
        for (auto w : out[v]) {
            length[w] = std::max(length[w], length[v] + 1);
            if (--indeg[w] == 0) {
                ready.push_back(w);
            }
        }
    }
    if (visited != V) {
        throw CycleError("temporal graph contains a cycle");
    }
    return best;
}

SuccessEstimate empirical_success(const MbqcPlan &plan, const field::FunctionTable &target, std::uint64_t trials,
                                  std::uint64_t seed, bool force_sampling) {
    plan.validate();
    if (trials < 1) {
        throw std::invalid_argument("empirical_success needs at least one trial");
    }
    const std::size_t size = field::table_size(plan.d, plan.n);
    if (target.values.size() != size || target.n != plan.n) {
        throw DimensionMismatch("target table does not match the plan's input space");
    }
    SuccessEstimate est{Rational(1), Rational(0), true};
    std::vector<Rational> per_input(size);
    bool exact = !force_sampling;
    if (exact) {
        try {
            for (std::size_t idx = 0; idx < size; ++idx) {
                Rational p = 0;
                for (const auto &[o, prob] : output_distribution(plan, target.point(idx))) {
                    if (o == target.values[idx]) {
                        p += prob;
                    }
                }
                per_input[idx] = p;
            }
        } catch (const GuardExceeded &) {
            exact = false;
        }
    }
    if (!exact) {
        std::mt19937_64 seeder(seed);
        for (std::size_t idx = 0; idx < size; ++idx) {
            const auto input = target.point(idx);
            std::uint64_t hits = 0;
            for (std::uint64_t t = 0; t < trials; ++t) {
                if (run(plan, input, seeder()).output == target.values[idx]) {
                    ++hits;
                }
            }
            per_input[idx] = Rational(BigInt(hits), BigInt(trials));
        }
    }
    Rational sum = 0;
    for (const auto &p : per_input) {
        est.p_S = std::min(est.p_S, p);
        sum += p;
    }
    est.p_bar_S = sum / Rational(BigInt(size));
    est.exact = exact;
    return est;
}

}  // namespace ldmbqc::mbqc
