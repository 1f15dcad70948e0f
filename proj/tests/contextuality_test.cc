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

#include <gtest/gtest.h>

#include <random>

#include "ldmbqc/compiler/compiler.h"
#include "ldmbqc/contextuality/contextuality.h"
#include "ldmbqc/errors.h"
#include "ldmbqc/mbqc/engine.h"

namespace ldmbqc::contextuality {
namespace {

using field::Element;
using field::FunctionTable;
using field::Modulus;
using field::MultiPoly;

TEST(DegreeWitness, Examples) {
    const auto F2 = Modulus::make(2);
    const auto nand = MultiPoly::monomial(F2, {1, 1}, 1) + MultiPoly::constant(F2, 2, 1);
    const auto w = degree_witness(nand);
    EXPECT_EQ(w.verdict, Verdict::StronglyNonlocal);
    EXPECT_EQ(w.degree, 2u);
    EXPECT_EQ(w.monomial, (field::Exponents{1, 1}));

    const auto e3 = FunctionTable::from_values(Modulus::make(5), 1, {1, 3, 4, 2, 1});
    EXPECT_EQ(degree_witness(e3).verdict, Verdict::Inconclusive);
    EXPECT_EQ(degree_witness(MultiPoly::constant(Modulus::make(7), 2, 3)).verdict, Verdict::Inconclusive);
    EXPECT_THROW(degree_witness(MultiPoly::constant(Modulus::make(4), 1, 1)), UnsupportedModulus);
    EXPECT_THROW(degree_witness(MultiPoly::constant(Modulus::make(6), 1, 1)), UnsupportedModulus);

    // Z_6: the identity has degree 1 < 6; delta_0 has no polynomial form.
    EXPECT_EQ(degree_witness(FunctionTable::from_values(Modulus::make(6), 1, {0, 1, 2, 3, 4, 5})).verdict,
              Verdict::Inconclusive);
    EXPECT_THROW(degree_witness(FunctionTable::from_values(Modulus::make(6), 1, {1, 0, 0, 0, 0, 0})),
                 UnsupportedWitness);
}

// Exhaustive search over all d^{N d} local assignments.
bool brute_force_ncva(const NcvaInstance &inst) {
    const std::uint32_t d = inst.d, N = inst.N;
    const std::size_t cells = static_cast<std::size_t>(N) * d;
    std::vector<std::uint32_t> s(cells, 0);
    while (true) {
        bool ok = true;
        for (std::size_t idx = 0; ok && idx < inst.target.size(); ++idx) {
            const auto i = inst.target.point(idx);
            std::uint64_t o = inst.s0;
            for (std::uint32_t k = 0; k < N; ++k) {
                std::uint64_t q = inst.q0[k];
                for (std::uint32_t j = 0; j < inst.n; ++j) {
                    q += static_cast<std::uint64_t>(inst.Q[k][j]) * i[j];
                }
                o += static_cast<std::uint64_t>(inst.z[k]) * s[k * d + q % d];
            }
            ok = o % d == inst.target.values[idx];
        }
        if (ok) {
            return true;
        }
        std::size_t c = 0;
        while (c < cells && ++s[c] == d) {
            s[c++] = 0;
        }
        if (c == cells) {
            return false;
        }
    }
}

bool satisfies(const NcvaInstance &inst, const LocalAssignment &a) {
    for (std::size_t idx = 0; idx < inst.target.size(); ++idx) {
        const auto i = inst.target.point(idx);
        std::uint64_t o = inst.s0;
        for (std::uint32_t k = 0; k < inst.N; ++k) {
            std::uint64_t q = inst.q0[k];
            for (std::uint32_t j = 0; j < inst.n; ++j) {
                q += static_cast<std::uint64_t>(inst.Q[k][j]) * i[j];
            }
            o += static_cast<std::uint64_t>(inst.z[k]) * a.s[k][q % inst.d];
        }
        if (o % inst.d != inst.target.values[idx]) {
            return false;
        }
    }
    return true;
}

TEST(NcvaSearch, AgreesWithBruteForce) {
    std::mt19937_64 rng(31);
    int found = 0, nonlocal = 0;
    for (int t = 0; t < 300; ++t) {
        const std::uint32_t d = t % 2 ? 3 : 2;
        const std::uint32_t n = 1 + (t / 2) % 2;
        const std::uint32_t N = 2 + (t / 4) % 2;
        std::uniform_int_distribution<std::uint32_t> e(0, d - 1);
        NcvaInstance inst;
        inst.d = d;
        inst.n = n;
        inst.N = N;
        inst.Q.assign(N, std::vector<std::uint32_t>(n));
        for (auto &row : inst.Q) {
            for (auto &x : row) {
                x = e(rng);
            }
        }
        inst.q0.resize(N);
        inst.z.resize(N);
        for (std::uint32_t k = 0; k < N; ++k) {
            inst.q0[k] = e(rng);
            inst.z[k] = e(rng);
        }
        inst.s0 = e(rng);
        std::vector<Element> values(field::table_size(d, n));
        for (auto &v : values) {
            v = e(rng);
        }
        inst.target = FunctionTable::from_values(Modulus::make(d), n, values);
        const auto w = ncva_search(inst);
        const bool exists = brute_force_ncva(inst);
        ASSERT_EQ(w.verdict == Verdict::NcvaFound, exists) << "trial " << t;
        if (exists) {
            ASSERT_TRUE(w.assignment.has_value());
            EXPECT_TRUE(satisfies(inst, *w.assignment));
            ++found;
        } else {
            EXPECT_EQ(w.verdict, Verdict::StronglyNonlocal);
            EXPECT_EQ(w.excluded, w.search_space);
            ++nonlocal;
        }
    }
    EXPECT_GT(found, 0);
    EXPECT_GT(nonlocal, 0);
}

TEST(NcvaSearch, PlanExamples) {
    const auto nand = ncva_search(compiler::compile_nand().plan);
    EXPECT_EQ(nand.verdict, Verdict::StronglyNonlocal);
    EXPECT_EQ(nand.search_space, 64);
    EXPECT_EQ(nand.excluded, 64);
    EXPECT_EQ(nand.report(), "verdict: strongly-nonlocal\nsearch: 64 of 64 assignments excluded\n");

    const auto e3 = ncva_search(compiler::compile_exponential(5, 2).plan);
    ASSERT_EQ(e3.verdict, Verdict::NcvaFound);
    // The single party's assignment is u^{-q} itself.
    EXPECT_EQ(e3.assignment->s[0], (std::vector<std::uint32_t>{1, 3, 4, 2, 1}));

    auto constant = compiler::compile_nand().plan;
    constant.z = {0, 0, 0};
    constant.s0 = 1;
    EXPECT_EQ(ncva_search(constant).verdict, Verdict::NcvaFound);

    EXPECT_THROW(ncva_search(compiler::compile_quadratic(5).plan), GuardExceeded);
}

TEST(Temporal, DegreeBounds) {
    const auto flat3 = compiler::compile_general_prime({1, 0, 0}).plan;
    EXPECT_EQ(temporal_degree_bound(flat3), 2u);
    EXPECT_EQ(temporal_degree_bound(compiler::compile_nand().plan), 1u);

    mbqc::MbqcPlan chain;
    chain.d = 3;
    chain.n = 1;
    chain.N = 3;
    chain.resource = state::make_basis_state(3, {1, 1, 1});
    for (int k = 0; k < 3; ++k) {
        chain.parties.push_back(mbqc::Party{weyl::WeylLabel::z(3), weyl::clifford_mu(3, 2)});
    }
    chain.Q = {{1}, {0}, {0}};
    chain.T = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    chain.q0 = {0, 0, 0};
    chain.z = {0, 0, 1};
    chain.validate();
    EXPECT_EQ(temporal_degree_bound(chain), 8u);
    const auto report = temporal_check(chain);
    EXPECT_EQ(report.longest_path, 3u);
    EXPECT_FALSE(report.strongly_contextual);

    const auto nand = temporal_check(compiler::compile_nand().plan);
    EXPECT_EQ(nand.degree, 2u);
    EXPECT_TRUE(nand.strongly_contextual);
}

TEST(Distance, Delta) {
    EXPECT_EQ(delta_distance(3, 5), 2u);
    EXPECT_EQ(delta_distance(0, 5), 0u);
    EXPECT_EQ(delta_distance(2, 7), 2u);
    EXPECT_EQ(delta_distance(1, 2), 1u);
    EXPECT_THROW(delta_distance(1, 4), UnsupportedModulus);
}

// min over all reduced polynomials of combined degree <= d-1 of the Delta-distance.
std::uint64_t brute_force_nu(const FunctionTable &o) {
    const std::uint32_t d = o.modulus.size();
    std::vector<field::Exponents> monos;
    for (std::uint32_t a = 0; a < d; ++a) {
        for (std::uint32_t b = 0; b < d; ++b) {
            if (a + b <= d - 1) {
                monos.push_back({a, b});
            }
        }
    }
    std::vector<std::uint32_t> c(monos.size(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    while (true) {
        std::uint64_t dist = 0;
        for (std::size_t idx = 0; idx < o.size(); ++idx) {
            const auto x = o.point(idx);
            std::uint64_t p = 0;
            for (std::size_t m = 0; m < monos.size(); ++m) {
                p += c[m] * field::pow_mod(x[0], monos[m][0], d) * field::pow_mod(x[1], monos[m][1], d);
            }
            const std::uint32_t diff = (o.values[idx] + d - p % d) % d;
            dist += std::min(diff, d - diff);
        }
        best = std::min(best, dist);
        std::size_t k = 0;
        while (k < c.size() && ++c[k] == d) {
            c[k++] = 0;
        }
        if (k == c.size()) {
            return best;
        }
    }
}

TEST(Distance, NuAgainstBruteForce) {
    const auto F3 = Modulus::make(3);
    const auto x2y2 = MultiPoly::monomial(F3, {2, 2}, 1).to_table();
    const auto x2y = MultiPoly::monomial(F3, {2, 1}, 1).to_table();
    EXPECT_EQ(brute_force_nu(x2y2), 1u);
    EXPECT_EQ(nu_distance(x2y2).nu, 1u);
    EXPECT_EQ(brute_force_nu(x2y), 2u);
    EXPECT_EQ(nu_distance(x2y).nu, 2u);

    std::mt19937_64 rng(8);
    std::uniform_int_distribution<Element> e(0, 2);
    for (int t = 0; t < 10; ++t) {
        std::vector<Element> values(9);
        for (auto &v : values) {
            v = e(rng);
        }
        const auto o = FunctionTable::from_values(F3, 2, values);
        const auto got = nu_distance(o);
        EXPECT_EQ(got.nu, brute_force_nu(o));
        EXPECT_LE(field::combined_degree(got.minimizer), 2u);
    }

    EXPECT_EQ(nu_distance(FunctionTable::from_values(Modulus::make(5), 1, {1, 3, 4, 2, 1})).nu, 0u);
    EXPECT_EQ(nu_distance(FunctionTable::from_values(Modulus::make(2), 2, {1, 1, 1, 0})).nu, 1u);
}

TEST(Threshold, Checks) {
    // Deterministic success exceeds any threshold below 1.
    const auto det = threshold_check(1, 1, 1, 2, 2);
    EXPECT_TRUE(det.exceeded);
    EXPECT_EQ(det.threshold, Rational(1, 2));

    // Exactly at the threshold: strict inequality fails.
    const Rational at = 1 - Rational(2 * 2, 2 * 9);
    EXPECT_EQ(threshold_check(at, at, 2, 3, 2).threshold, at);
    EXPECT_FALSE(threshold_check(at, at, 2, 3, 2).exceeded);

    const auto noisy = threshold_check(Rational(9, 10), Rational(9, 10), 2, 3, 2);
    ASSERT_TRUE(noisy.ncf_bound.has_value());
    EXPECT_EQ(*noisy.ncf_bound, Rational(1, 20));
    EXPECT_FALSE(threshold_check(1, 1, 0, 3, 2).ncf_bound.has_value());
}

}  // namespace
}  // namespace ldmbqc::contextuality
