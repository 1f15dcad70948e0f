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

#ifndef LDMBQC_CONTEXTUALITY_CONTEXTUALITY_H
#define LDMBQC_CONTEXTUALITY_CONTEXTUALITY_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldmbqc/field/poly.h"
#include "ldmbqc/mbqc/plan.h"
#include "ldmbqc/rational.h"

namespace ldmbqc::contextuality {

enum class Verdict { StronglyNonlocal, NcvaFound, Inconclusive };

std::string to_string(Verdict v);

/// s[k][q]: the value party k reports for setting q.
struct LocalAssignment {
    std::uint32_t d = 2;
    std::vector<std::vector<std::uint32_t>> s;
};

struct Witness {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<LocalAssignment> assignment;  // for NcvaFound
    std::optional<field::Exponents> monomial;   // degree evidence
    std::uint32_t degree = 0;
    std::uint32_t d = 2;
    // Exhaustive search certificate: assignments ruled out versus all assignments.
    BigInt search_space = 0;
    BigInt excluded = 0;

    /// Structured multi-line text: verdict, certificate and search size.
    std::string report() const;
};

/// Degree test on a polynomial over a prime field: strongly non-local iff the
/// combined degree is at least d. Throws UnsupportedModulus for other moduli.
Witness degree_witness(const field::MultiPoly &o);

/// Same test from a table. Over composite Z_d the minimal-degree polynomial
/// representative is used; a non-polynomial table raises UnsupportedWitness.
Witness degree_witness(const field::FunctionTable &o);

/// The data ncva_search needs from a flat plan: settings map and post-processing.
struct NcvaInstance {
    std::uint32_t d = 2;
    std::uint32_t n = 0;
    std::uint32_t N = 0;
    mbqc::Matrix Q;
    std::vector<std::uint32_t> q0;
    std::vector<std::uint32_t> z;
    std::uint32_t s0 = 0;
    field::FunctionTable target;
};

/// Instance for a flat plan, with the target taken from extract_output_function.
NcvaInstance ncva_instance(const mbqc::MbqcPlan &plan);

inline constexpr std::uint64_t kNcvaGuard = 10000;

/// Depth-first search for s_k with sum_k z_k s_k(q_k(i)) + s0 = o(i) for all i.
///
/// Parties in index order, settings and values ascending. Returns NcvaFound with
/// the first assignment, or StronglyNonlocal with excluded == search_space = d^{N d}.
/// Throws GuardExceeded when N d^d exceeds `guard`.
Witness ncva_search(const NcvaInstance &instance, std::uint64_t guard = kNcvaGuard);
Witness ncva_search(const mbqc::MbqcPlan &plan, std::uint64_t guard = kNcvaGuard);

/// (d-1)^{|l|}, saturating at UINT64_MAX. Throws CycleError for cyclic T.
std::uint64_t temporal_degree_bound(const mbqc::MbqcPlan &plan);

struct TemporalReport {
    std::uint32_t longest_path = 0;
    std::uint64_t bound = 0;
    std::optional<std::uint32_t> degree;  // combined degree of the output, prime d
    bool strongly_contextual = false;     // degree > bound
};

/// Compares the output degree of a deterministic plan with (d-1)^{|l|}.
TemporalReport temporal_check(const mbqc::MbqcPlan &plan);

/// min(q, d-q) on canonical representatives. Defined for odd d and for d = 2.
std::uint32_t delta_distance(std::uint32_t q, std::uint32_t d);

struct NuResult {
    std::uint64_t nu = 0;
    field::MultiPoly minimizer;
};

/// min over p in Omega_n(d-1) of sum_i Delta(o(i) - p(i)), prime d, by exhaustive
/// enumeration; the lexicographically first minimizer is reported.
/// Throws GuardExceeded if |Omega_n(d-1)| exceeds `guard`.
NuResult nu_distance(const field::FunctionTable &o, std::size_t guard = std::size_t{1} << 20);

struct ThresholdReport {
    Rational threshold;                 // 1 - 2 nu / ((d-1) d^n)
    bool exceeded = false;              // p_S > threshold
    std::optional<Rational> ncf_bound;  // (1 - p_bar_S) / nu, when nu > 0
};

ThresholdReport threshold_check(const Rational &p_S, const Rational &p_bar_S, std::uint64_t nu, std::uint32_t d,
                                std::uint32_t n);

}  // namespace ldmbqc::contextuality

#endif
