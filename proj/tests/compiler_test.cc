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

namespace ldmbqc::compiler {
namespace {

using field::pow_mod;

std::vector<std::uint32_t> outputs(const CompileReport &r) {
    return mbqc::extract_output_function(r.plan).table.values;
}

TEST(Compile, Nand) {
    const auto r = compile_nand();
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.qudit_count, 3u);
    EXPECT_EQ(r.construction, Construction::NandGhz);
    EXPECT_EQ(outputs(r), (std::vector<std::uint32_t>{1, 1, 1, 0}));
}

TEST(Compile, Quadratic) {
    for (std::uint32_t d : {3u, 5u, 7u}) {
        const auto r = compile_quadratic(d);
        EXPECT_TRUE(r.verified);
        EXPECT_EQ(r.qudit_count, 2 * d);
        const auto out = outputs(r);
        for (std::uint32_t i = 0; i < d; ++i) {
            EXPECT_EQ(out[i], (i == 0 ? 0 : i * (i - 1) / 2) % d) << "d=" << d << " i=" << i;
        }
    }
    EXPECT_THROW(compile_quadratic(4), UnsupportedModulus);
    EXPECT_THROW(compile_quadratic(2), UnsupportedModulus);
}

TEST(Compile, Exponential) {
    EXPECT_EQ(outputs(compile_exponential(3, 2)), (std::vector<std::uint32_t>{1, 2, 1}));
    EXPECT_EQ(outputs(compile_exponential(5, 2)), (std::vector<std::uint32_t>{1, 3, 4, 2, 1}));
    LinearSpec zero;
    zero.a = {0};
    EXPECT_EQ(outputs(compile_exponential(5, 2, zero)), (std::vector<std::uint32_t>{1, 1, 1, 1, 1}));
    EXPECT_THROW(compile_exponential(5, 0), std::invalid_argument);
    EXPECT_THROW(compile_exponential(9, 3), std::invalid_argument);
}

TEST(Compile, PrimitiveElement) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        std::uint32_t expected = 0;
        for (std::uint32_t g = 1; g < p && !expected; ++g) {
            std::uint32_t order = 1;
            for (std::uint64_t x = g; x != 1; x = x * g % p) {
                ++order;
            }
            if (order == p - 1) {
                expected = g;
            }
        }
        EXPECT_EQ(primitive_element(p), expected) << p;
    }
    EXPECT_EQ(primitive_element(7), 3u);
}

TEST(ExponentialSum, Identity) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const auto t = exponential_sum_table(p);
        ASSERT_EQ(t.rows.size(), p - 1);
        for (std::uint32_t x = 0; x < p; ++x) {
            std::uint64_t s = 0;
            for (std::uint32_t k = 1; k < p; ++k) {
                EXPECT_EQ(t.rows[k - 1][x], pow_mod(t.u, std::uint64_t{k} * x, p));
                s += t.rows[k - 1][x];
            }
            // sum_{k=1}^{p-1} u^{kx} is -1 where u^x = 1 (x = 0 and x = p-1) and 0 otherwise.
            EXPECT_EQ(s % p, (x == 0 || x == p - 1) ? p - 1 : 0u);
            // sigma_p = -sum of the rows.
            EXPECT_EQ(t.sigma[x], (x == 0 || x == p - 1) ? 1u : 0u) << "p=" << p << " x=" << x;
        }
    }
    EXPECT_THROW(exponential_sum_table(2), std::invalid_argument);
    EXPECT_THROW(exponential_sum_table(9), std::invalid_argument);
    EXPECT_THROW(exponential_sum_table(17), std::invalid_argument);
}

TEST(ExponentialSum, FormatP3) {
    EXPECT_EQ(format_exponential_sum_table(exponential_sum_table(3)),
              "x          | 0 1 2\n"
              "-----------+------\n"
              "2^x        | 1 2 1\n"
              "2^2x       | 1 1 1\n"
              "-----------+------\n"
              "sigma_3(x) | 1 0 1\n");
}

TEST(GeneralPrime, ExhaustiveP3) {
    std::vector<std::uint32_t> m(3);
    for (std::uint32_t code = 0; code < 27; ++code) {
        m = {code % 3, code / 3 % 3, code / 9};
        const auto r = compile_general_prime(m);
        EXPECT_TRUE(r.verified);
        EXPECT_EQ(r.qudit_count, 12u);
        EXPECT_EQ(r.construction, Construction::PrimeGeneral);
        EXPECT_EQ(outputs(r), m);
        EXPECT_TRUE(r.plan.is_flat());
    }
}

TEST(GeneralPrime, RandomP5) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint32_t> e(0, 4);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint32_t> m(5);
        for (auto &v : m) {
            v = e(rng);
        }
        const auto r = compile_general_prime(m);
        EXPECT_EQ(r.qudit_count, 80u);
        EXPECT_EQ(outputs(r), m);
    }
}

TEST(GeneralPrime, BinaryAffine) {
    for (std::vector<std::uint32_t> m : {std::vector<std::uint32_t>{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
        const auto r = compile_general_prime(m);
        EXPECT_EQ(r.construction, Construction::Affine);
        EXPECT_EQ(r.qudit_count, 1u);
        EXPECT_EQ(outputs(r), m);
    }
}

TEST(OddRing, Examples) {
    const auto delta = compile_odd_ring({1, 0, 0});
    EXPECT_EQ(delta.qudit_count, 6u);
    EXPECT_EQ(outputs(delta), (std::vector<std::uint32_t>{1, 0, 0}));

    std::vector<std::uint32_t> id(9);
    for (std::uint32_t i = 0; i < 9; ++i) {
        id[i] = i;
    }
    const auto r = compile_odd_ring(id);
    EXPECT_EQ(r.qudit_count, 18u);
    EXPECT_EQ(r.construction, Construction::OddRing);
    EXPECT_EQ(outputs(r), id);
    // Z_9 has no polynomial representative of delta_0; the ring compiler still realizes it.
    std::vector<std::uint32_t> d9(9, 0);
    d9[0] = 1;
    EXPECT_EQ(outputs(compile_odd_ring(d9)), d9);
    EXPECT_THROW(compile_odd_ring({0, 1, 0, 1}), UnsupportedModulus);
}

TEST(Verify, DetectsTampering) {
    auto r = compile_general_prime({2, 0, 1});
    ASSERT_TRUE(r.verified);
    r.plan.z[0] = (r.plan.z[0] + 1) % 3;
    if (r.plan.z[0] == 0) {
        r.plan.z[0] = 1;
    }
    EXPECT_FALSE(verify(r));
    EXPECT_FALSE(r.verified);
    try {
        verify_or_throw(r);
        FAIL() << "expected VerificationFailed";
    } catch (const VerificationFailed &e) {
        EXPECT_NE(std::string(e.what()).find("verification failed at input ("), std::string::npos);
    }
}

TEST(CompileTable, Dispatch) {
    EXPECT_EQ(compile_table(5, {1, 2, 3, 4, 0}, false).construction, Construction::PrimeGeneral);
    EXPECT_EQ(compile_table(5, {1, 2, 3, 4, 0}, true).construction, Construction::OddRing);
    EXPECT_EQ(compile_table(9, {0, 1, 2, 3, 4, 5, 6, 7, 8}, true).qudit_count, 18u);
    EXPECT_THROW(compile_table(9, {0, 1, 2, 3, 4, 5, 6, 7, 8}, false), UnsupportedModulus);
    EXPECT_THROW(compile_table(4, {0, 1, 2, 3}, false), UnsupportedModulus);
    EXPECT_THROW(compile_table(5, {0, 1}, false), std::invalid_argument);
}

TEST(Compile, NcvaVerdicts) {
    EXPECT_EQ(contextuality::ncva_search(compile_nand().plan).verdict, contextuality::Verdict::StronglyNonlocal);
    EXPECT_EQ(contextuality::ncva_search(compile_exponential(3, 2).plan).verdict,
              contextuality::Verdict::NcvaFound);
    // Quadratic output over Z_3 has degree 2 < 3.
    EXPECT_EQ(contextuality::degree_witness(mbqc::extract_output_function(compile_quadratic(3).plan).table).verdict,
              contextuality::Verdict::Inconclusive);
}

}  // namespace
}  // namespace ldmbqc::compiler
