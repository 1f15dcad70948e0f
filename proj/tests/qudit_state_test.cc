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

#include "ldmbqc/errors.h"
#include "ldmbqc/state/cyclotomic.h"
#include "ldmbqc/state/dense_backend.h"
#include "ldmbqc/state/monomial.h"
#include "ldmbqc/state/sparse_state.h"
#include "ldmbqc/weyl/dense.h"

namespace ldmbqc::state {
namespace {

using weyl::Vec2;

MonomialMatrix W(std::uint32_t d, std::uint32_t a, std::uint32_t b) {
    return MonomialMatrix::weyl(d, Vec2{a, b});
}

MonomialMatrix Y2() {
    // Y = i X Z = tau W_{1,1} with tau = i, and W_{1,1} = tau^{-1} Z X.
    return MonomialMatrix::weyl(2, Vec2{1, 1});
}

TEST(Cyclotomic, Polynomials) {
    EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(10), (std::vector<std::int64_t>{1, -1, 1, -1, 1}));
}

TEST(Cyclotomic, ScaledPowerDetection) {
    for (std::uint32_t d : {2u, 3u, 5u, 6u}) {
        const ZetaReducer R(d);
        for (std::uint32_t j = 0; j < 2 * d; ++j) {
            std::vector<std::int64_t> c(2 * d, 0);
            c[j] = 3;
            const auto sp = R.as_scaled_power(R.reduce(c));
            ASSERT_TRUE(sp.has_value());
            EXPECT_EQ(sp->first, 3);
            EXPECT_EQ(sp->second, j);
        }
        // 1 + zeta has modulus != integer power form unless d = 1.
        std::vector<std::int64_t> c(2 * d, 0);
        c[0] = 1;
        c[1] = 1;
        EXPECT_FALSE(R.as_scaled_power(R.reduce(c)).has_value());
    }
}

TEST(Monomial, MatchesDense) {
    for (std::uint32_t d : {2u, 3u, 5u}) {
        for (std::uint32_t a = 0; a < d; ++a) {
            for (std::uint32_t b = 0; b < d; ++b) {
                for (std::uint32_t t = 0; t < 2 * d; ++t) {
                    EXPECT_TRUE(MonomialMatrix::weyl(d, {a, b}, t).dense().isApprox(weyl::weyl_matrix(d, {a, b}, t), 1e-9));
                }
            }
        }
        const auto M = W(d, 1, 1) * W(d, 0, 1);
        EXPECT_TRUE(M.dense().isApprox(W(d, 1, 1).dense() * W(d, 0, 1).dense(), 1e-9));
        EXPECT_TRUE(W(d, 1, 1).pow(d).is_identity() || d == 2);
    }
}

TEST(GlobalObservable, RejectsNonOmegaSpectrum) {
    // zeta * Z has eigenvalues outside the d-th roots of unity for odd d.
    EXPECT_THROW(GlobalObservable({W(3, 1, 0).times_zeta(1)}), PhaseDomainError);
    EXPECT_NO_THROW(GlobalObservable({W(3, 1, 0), W(3, 0, 1)}));
}

TEST(States, Constructors) {
    const auto ab = make_ghz(2, 3, true);
    ASSERT_EQ(ab.num_terms(), 2u);
    EXPECT_EQ(ab.terms()[0].ket, (Ket{0, 0, 1}));
    EXPECT_EQ(ab.tau_exp(0), 0u);
    EXPECT_EQ(ab.terms()[1].ket, (Ket{1, 1, 0}));
    EXPECT_EQ(ab.tau_exp(1), 2u);

    EXPECT_EQ(make_ghz(3, 1).num_terms(), 3u);
    const auto bell = make_ghz(2, 2);
    EXPECT_EQ(bell.terms()[1].ket, (Ket{1, 1}));

    const auto e2 = make_example2_state(3);
    ASSERT_EQ(e2.num_terms(), 3u);
    EXPECT_EQ(e2.terms()[0].ket, (Ket{0, 0, 1, 1, 2, 2}));
    EXPECT_EQ(e2.terms()[1].ket, (Ket{1, 1, 2, 2, 0, 0}));
    EXPECT_EQ(e2.terms()[2].ket, (Ket{2, 2, 0, 0, 1, 1}));
    EXPECT_THROW(make_example2_state(4), UnsupportedModulus);

    EXPECT_THROW(SparseState(2, 2, {{0, {0, 0}}, {1, {0, 0}}}), std::invalid_argument);
    EXPECT_THROW(SparseState(2, 2, {{0, {0, 2}}}), std::invalid_argument);
}

TEST(States, EqualUpToPhase) {
    const SparseState a(3, 1, {{0, {0}}, {2, {1}}});
    const SparseState b(3, 1, {{0, {0}}, {0, {1}}});
    const SparseState c(3, 1, {{2, {0}}, {4, {1}}});
    EXPECT_FALSE(a.equal_up_to_phase(b));
    EXPECT_TRUE(a.equal_up_to_phase(c));
}

TEST(Eigenphase, AndersBrowneObservables) {
    const auto ab = make_ghz(2, 3, true);
    const auto X = W(2, 0, 1);
    const auto Y = Y2();
    EXPECT_EQ(eigenphase_of(GlobalObservable({X, X, X}), ab), 1u);
    EXPECT_EQ(eigenphase_of(GlobalObservable({Y, Y, X}), ab), 0u);
    EXPECT_EQ(eigenphase_of(GlobalObservable({Y, X, Y}), ab), 1u);
    EXPECT_EQ(eigenphase_of(GlobalObservable({X, Y, Y}), ab), 1u);
    EXPECT_EQ(eigenphase_of(GlobalObservable({W(2, 1, 0), W(2, 1, 0)}), make_ghz(2, 2)), 0u);
}

TEST(Eigenphase, ApplyObservable) {
    const auto one = make_basis_state(5, {1});
    const auto out = apply_observable(GlobalObservable({W(5, 1, 0)}), one);
    EXPECT_EQ(out.terms()[0].zeta_exp, 2u);  // omega^1 = zeta^2
    EXPECT_EQ(apply_observable(GlobalObservable({MonomialMatrix::identity(5)}), one), one);
}

TEST(DenseOracle, AgreesWithSparse) {
    std::mt19937_64 rng(17);
    for (std::uint32_t d : {2u, 3u, 5u}) {
        const auto psi = make_ghz(d, 3);
        std::uniform_int_distribution<std::uint32_t> e(0, d - 1);
        for (int t = 0; t < 80; ++t) {
            std::vector<MonomialMatrix> sites;
            for (int k = 0; k < 3; ++k) {
                sites.push_back(W(d, e(rng), e(rng)));
            }
            const GlobalObservable M(sites);
            EXPECT_EQ(eigenphase_of(M, psi), dense_oracle(M, psi));
        }
    }
    EXPECT_EQ(dense_oracle(GlobalObservable({MonomialMatrix::identity(3)}), make_basis_state(3, {2})), 0u);
    EXPECT_FALSE(dense_oracle(GlobalObservable({W(3, 0, 1)}), make_basis_state(3, {0})).has_value());
    EXPECT_FALSE(eigenphase_of(GlobalObservable({W(3, 0, 1)}), make_basis_state(3, {0})).has_value());
}

TEST(DenseOracle, InconsistencyBand) {
    Eigen::VectorXcd psi(2);
    psi << 1, 0;
    Eigen::VectorXcd near = psi;
    near(1) = 1e-7;
    EXPECT_THROW(dense_eigenphase(psi, near, 2), InconsistencyAlarm);
    near(1) = 1e-12;
    EXPECT_EQ(dense_eigenphase(psi, near, 2), 0u);
    near(1) = 0.5;
    EXPECT_FALSE(dense_eigenphase(psi, near, 2).has_value());
}

// Born probabilities and post-states of a Weyl measurement from dense projectors.
std::vector<double> dense_probabilities(const SparseState &psi, std::uint32_t site, const MonomialMatrix &M) {
    const std::uint32_t d = psi.d();
    const auto v = to_dense(psi);
    const Eigen::MatrixXcd Md = M.dense();
    std::vector<double> out(d, 0);
    for (std::uint32_t m = 0; m < d; ++m) {
        Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(d, d);
        Eigen::MatrixXcd Mk = Eigen::MatrixXcd::Identity(d, d);
        for (std::uint32_t k = 0; k < d; ++k) {
            P += weyl::zeta_power(-2 * static_cast<std::int64_t>(m * k), d) * Mk;
            Mk = Md * Mk;
        }
        P /= static_cast<double>(d);
        out[m] = apply_local(v, d, psi.num_sites(), site, P).squaredNorm();
    }
    return out;
}

TEST(Measurement, BranchesMatchDenseProjectors) {
    std::mt19937_64 rng(23);
    for (std::uint32_t d : {2u, 3u, 5u}) {
        std::uniform_int_distribution<std::uint32_t> e(0, d - 1);
        const std::vector<SparseState> states{make_ghz(d, 3), make_basis_state(d, {1, 0, 2 % d})};
        for (const auto &psi : states) {
            for (int t = 0; t < 20; ++t) {
                const std::uint32_t site = e(rng) % 3;
                const auto M = W(d, e(rng), e(rng));
                const auto branches = outcome_branches(psi, site, M);
                const auto expected = dense_probabilities(psi, site, M);
                Rational total = 0;
                std::vector<double> got(d, 0);
                for (const auto &b : branches) {
                    total += b.probability;
                    got[b.outcome] = to_double(b.probability);
                    // The post-state is the normalized projection.
                    const auto post = to_dense(b.post);
                    const auto again = outcome_branches(b.post, site, M);
                    ASSERT_EQ(again.size(), 1u);
                    EXPECT_EQ(again[0].outcome, b.outcome);
                    EXPECT_NEAR(post.norm(), 1.0, 1e-9);
                }
                EXPECT_EQ(total, 1);
                for (std::uint32_t m = 0; m < d; ++m) {
                    EXPECT_NEAR(got[m], expected[m], 1e-9);
                }
            }
        }
    }
}

TEST(Measurement, DeterministicCases) {
    const auto [m1, post1] = measure_local(make_basis_state(5, {1}), 0, W(5, 1, 0), 1);
    EXPECT_EQ(m1, 1u);
    const SparseState plus(2, 1, {{0, {0}}, {0, {1}}});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EXPECT_EQ(measure_local(plus, 0, W(2, 0, 1), seed).first, 0u);
    }
}

TEST(Measurement, SequenceReproducesNand) {
    // Settings q = (i1, i2, i1 + i2); X for 0 and Y for 1; output = sum of outcomes.
    const auto X = W(2, 0, 1);
    const auto Y = Y2();
    for (std::uint32_t i1 = 0; i1 < 2; ++i1) {
        for (std::uint32_t i2 = 0; i2 < 2; ++i2) {
            const std::uint32_t q[3] = {i1, i2, i1 ^ i2};
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                std::mt19937_64 rng(seed);
                auto psi = make_ghz(2, 3, true);
                std::uint32_t o = 0;
                for (std::uint32_t k = 0; k < 3; ++k) {
                    auto [m, post] = measure_local(psi, k, q[k] ? Y : X, rng);
                    o ^= m;
                    psi = post;
                }
                EXPECT_EQ(o, 1 - i1 * i2);
            }
        }
    }
}

TEST(Measurement, SampleIndexFrequencies) {
    std::mt19937_64 rng(1);
    const std::vector<Rational> p{Rational(1, 4), Rational(3, 4)};
    int ones = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
        ones += sample_index(p, rng) == 1;
    }
    // Within 5 sigma of 3/4.
    EXPECT_NEAR(ones / static_cast<double>(trials), 0.75, 5 * std::sqrt(0.75 * 0.25 / trials));
}

}  // namespace
}  // namespace ldmbqc::state
