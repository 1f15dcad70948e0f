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

#ifndef LDMBQC_COMPILER_COMPILER_H
#define LDMBQC_COMPILER_COMPILER_H

#include <cstdint>
#include <string>
#include <vector>

#include "ldmbqc/field/poly.h"
#include "ldmbqc/mbqc/plan.h"

namespace ldmbqc::compiler {

enum class Construction { NandGhz, Quadratic, Exponential, PrimeGeneral, OddRing, Affine };

std::string to_string(Construction c);

struct CompileReport {
    mbqc::MbqcPlan plan;
    std::uint32_t qudit_count = 0;
    Construction construction = Construction::Affine;
    field::FunctionTable target;
    bool verified = false;
};

/// f(i) = a . i + c over Z_d. The default is f(i) = i on one input.
struct LinearSpec {
    std::vector<std::uint32_t> a{1};
    std::uint32_t c = 0;

    std::uint32_t n() const {
        return static_cast<std::uint32_t>(a.size());
    }
    std::uint32_t eval(const std::vector<std::uint32_t> &i, std::uint32_t d) const;
};

/// Three-qubit GHZ plan computing NAND(i1, i2).
CompileReport compile_nand();

/// 2d parties on the two-copies-per-shift state; output f(f-1)/2. Odd prime d.
CompileReport compile_quadratic(std::uint32_t d, const LinearSpec &f = {});

/// One party on |1>, fiducial Z, control M_u; output u^{-f}. Throws std::invalid_argument unless u is a unit.
CompileReport compile_exponential(std::uint32_t d, std::uint32_t u, const LinearSpec &f = {});

/// Smallest generator of Z_p^x.
std::uint32_t primitive_element(std::uint32_t p);

/// Any m: Z_p -> Z_p on p(p-1)^2 parties, each an exponential party
/// with control M_{u^{-l}} and setting k(x - j); p = 2 uses a one-party affine plan.
CompileReport compile_general_prime(const std::vector<std::uint32_t> &m);

/// Any m: Z_d -> Z_d for odd d on 2d parties with control M_{d-1} and setting +-(x - j).
CompileReport compile_odd_ring(const std::vector<std::uint32_t> &m);

/// Compiles for the CLI: prime d uses compile_general_prime unless odd_ring is set.
/// Throws UnsupportedModulus when no construction applies.
CompileReport compile_table(std::uint32_t d, const std::vector<std::uint32_t> &m, bool odd_ring);

/// Compares the extracted output with the target on every input and sets report.verified.
bool verify(CompileReport &report);

/// As verify, but throws VerificationFailed with the first differing input.
void verify_or_throw(CompileReport &report);

/// The exponential-sum table: rows u^{kx} for k = 1..p-1 and sigma_p(x).
struct ExponentialSumTable {
    std::uint32_t p = 0;
    std::uint32_t u = 0;
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::uint32_t> sigma;
};

/// Throws std::invalid_argument unless p is an odd prime <= 13.
ExponentialSumTable exponential_sum_table(std::uint32_t p);

std::string format_exponential_sum_table(const ExponentialSumTable &t);

}  // namespace ldmbqc::compiler

#endif
