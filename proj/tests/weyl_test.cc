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
#include "ldmbqc/weyl/dense.h"
#include "ldmbqc/weyl/weyl.h"

namespace ldmbqc::weyl {
namespace {

constexpr double kTol = 1e-9;

using Mat2 = std::array<std::array<std::uint32_t, 2>, 2>;

Eigen::MatrixXcd pow_matrix(const Eigen::MatrixXcd &m, std::uint64_t e) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    for (std::uint64_t k = 0; k < e; ++k) {
        out = m * out;
    }
    return out;
}

TEST(Phases, TauAndZeta) {
    EXPECT_EQ(tau_to_zeta(1, 2), 1u);
    EXPECT_EQ(tau_to_zeta(1, 3), 4u);  // tau = zeta^{d+1}
    EXPECT_EQ(zeta_to_tau(4, 3), 1u);
    EXPECT_THROW(zeta_to_tau(3, 3), PhaseDomainError);
    EXPECT_EQ(zeta_to_omega(4, 5), 2u);
    EXPECT_FALSE(zeta_to_omega(3, 5).has_value());
    for (std::uint32_t d : {2u, 3u, 4u, 5u, 6u, 7u}) {
        // tau^2 = omega and tau^{d^2} = 1.
        const auto tau = zeta_power(tau_to_zeta(1, d), d);
        EXPECT_NEAR(std::abs(tau * tau - zeta_power(2, d)), 0, kTol);
        EXPECT_NEAR(std::abs(std::pow(tau, static_cast<double>(d * d)) - 1.0), 0, 1e-7);
    }
}

TEST(Weyl, DenseDefinition) {
    // W_{a,b} = tau^{-ab} Z^a X^b with Z|z> = omega^z |z>, X|z> = |z+1>.
    for (std::uint32_t d : {2u, 3u, 5u}) {
        Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(d, d), X = Eigen::MatrixXcd::Zero(d, d);
        for (std::uint32_t z = 0; z < d; ++z) {
            Z(z, z) = zeta_power(2 * z, d);
            X((z + 1) % d, z) = 1;
        }
        EXPECT_TRUE(weyl_matrix(d, {1, 0}).isApprox(Z, kTol));
        EXPECT_TRUE(weyl_matrix(d, {0, 1}).isApprox(X, kTol));
        for (std::uint32_t a = 0; a < d; ++a) {
            for (std::uint32_t b = 0; b < d; ++b) {
                const auto phase = zeta_power(tau_to_zeta(-static_cast<std::int64_t>(a * b), d), d);
                const Eigen::MatrixXcd expected = phase * pow_matrix(Z, a) * pow_matrix(X, b);
                EXPECT_TRUE(weyl_matrix(d, {a, b}).isApprox(expected, kTol)) << d << " " << a << " " << b;
            }
        }
    }
}

TEST(Symplectic, ProductExamples) {
    EXPECT_EQ(symplectic_product(5, {1, 0}, {0, 1}), 1u);
    EXPECT_EQ(symplectic_product(5, {0, 1}, {1, 0}), 4u);
    EXPECT_EQ(symplectic_product(5, {2, 3}, {2, 3}), 0u);
    EXPECT_EQ(commutation_phase(WeylLabel::z(5), WeylLabel::x(5)), 1u);
    EXPECT_EQ(commutation_phase(WeylLabel::make(5, 2, 3), WeylLabel::make(5, 1, 4)), 0u);
    EXPECT_THROW(commutation_phase(WeylLabel::z(3), WeylLabel::z(5)), DimensionMismatch);
}

TEST(Symplectic, CommutationMatchesDense) {
    for (std::uint32_t d : {2u, 3u, 4u, 5u}) {
        for (std::uint32_t c = 0; c < d * d * d * d; ++c) {
            const Vec2 v{c % d, (c / d) % d}, w{(c / d / d) % d, c / d / d / d};
            const auto A = weyl_matrix(d, v), B = weyl_matrix(d, w);
            const auto k = commutation_phase(WeylLabel::make(d, v[0], v[1]), WeylLabel::make(d, w[0], w[1]));
            EXPECT_TRUE((A * B).isApprox(zeta_power(2 * k, d) * B * A, kTol));
        }
    }
}

TEST(Symplectic, CheckMatchesFormPreservation) {
    // C^T sigma C = sigma checked entry-wise, against the library predicate.
    for (std::uint32_t d : {2u, 3u, 4u, 5u}) {
        for (std::uint32_t c = 0; c < d * d * d * d; ++c) {
            const Mat2 C{{{c % d, (c / d) % d}, {(c / d / d) % d, c / d / d / d}}};
            bool preserves = true;
            const Vec2 basis[2] = {{1, 0}, {0, 1}};
            for (const auto &x : basis) {
                for (const auto &y : basis) {
                    const Vec2 Cx{(C[0][0] * x[0] + C[0][1] * x[1]) % d, (C[1][0] * x[0] + C[1][1] * x[1]) % d};
                    const Vec2 Cy{(C[0][0] * y[0] + C[0][1] * y[1]) % d, (C[1][0] * y[0] + C[1][1] * y[1]) % d};
                    preserves &= symplectic_product(d, Cx, Cy) == symplectic_product(d, x, y);
                }
            }
            EXPECT_EQ(check_symplectic(C, d), preserves);
        }
    }
    EXPECT_TRUE(check_symplectic({{{1, 1}, {0, 1}}}, 5));
    EXPECT_FALSE(check_symplectic({{{1, 0}, {0, 2}}}, 5));
}

TEST(Clifford, NamedActions) {
    EXPECT_EQ(clifford_s(3).C.apply({0, 1}), (Vec2{1, 1}));
    EXPECT_EQ(clifford_mu(5, 2).C.apply({1, 0}), (Vec2{3, 0}));
    EXPECT_EQ(clifford_displacement(5, {2, 3}).C, SymplecticMatrix::identity(5));
    EXPECT_THROW(clifford_mu(6, 2), std::invalid_argument);
    EXPECT_THROW(clifford_explicit(5, {{{1, 0}, {0, 2}}}, {0, 0}), std::invalid_argument);
    EXPECT_EQ(named_clifford("S", 3), clifford_s(3));
    EXPECT_EQ(named_clifford("Mu", 5, 2), clifford_mu(5, 2));
    EXPECT_EQ(named_clifford("W", 5, 1, {1, 2}), clifford_displacement(5, {1, 2}));
}

TEST(Clifford, DenseMatricesAreUnitaryAndAct) {
    for (std::uint32_t d : {3u, 5u}) {
        for (const auto &V : {clifford_s(d), clifford_mu(d, d - 1), clifford_explicit(d, {{{2, 1}, {1, 1}}}, {1, 2}, 3)}) {
            const auto U = clifford_matrix(V);
            EXPECT_TRUE((U * U.adjoint()).isApprox(Eigen::MatrixXcd::Identity(d, d), kTol));
        }
        // S is diagonal with entries tau^{z^2}.
        const auto S = clifford_matrix(clifford_s(d));
        const auto ratio = S(0, 0);
        for (std::uint32_t z = 0; z < d; ++z) {
            EXPECT_NEAR(std::abs(S(z, z) / ratio - zeta_power(tau_to_zeta(z * z, d), d)), 0, kTol);
        }
        // M_u |k> = |uk>.
        const auto M = clifford_matrix(clifford_mu(d, 2));
        for (std::uint32_t k = 0; k < d; ++k) {
            EXPECT_NEAR(std::abs(M((2 * k) % d, k)), 1, kTol);
        }
    }
}

TEST(ConjugateWeyl, Examples) {
    // Quadratic control: V = S W_x, x = (0, -1), v = X: phase f(f-1)/2.
    for (std::uint32_t d : {3u, 5u, 7u}) {
        const auto V = clifford_explicit(d, clifford_s(d).C.m, {0, d - 1});
        for (std::uint64_t f = 0; f < d; ++f) {
            EXPECT_EQ(conjugate_weyl(V, {0, 1}, f).omega_exp, (f * (f - 1) / 2) % d) << d << " " << f;
        }
    }
    // A pure Weyl displacement: phase f [x, v], label fixed.
    const auto W = clifford_displacement(5, {2, 3});
    for (std::uint64_t f = 0; f < 5; ++f) {
        const auto c = conjugate_weyl(W, {1, 4}, f);
        EXPECT_EQ(c.omega_exp, f * symplectic_product(5, {2, 3}, {1, 4}) % 5);
        EXPECT_EQ(c.label, (Vec2{1, 4}));
    }
    const auto c0 = conjugate_weyl(clifford_s(5), {3, 1}, 0);
    EXPECT_EQ(c0.omega_exp, 0u);
    EXPECT_EQ(c0.label, (Vec2{3, 1}));
}

Mat2 random_symplectic(std::uint32_t d, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint32_t> e(0, d - 1);
    while (true) {
        Mat2 C{{{e(rng), e(rng)}, {e(rng), e(rng)}}};
        if (check_symplectic(C, d)) {
            return C;
        }
    }
}

TEST(ConjugateWeyl, MatchesDenseOddDimensions) {
    std::mt19937_64 rng(5);
    for (std::uint32_t d : {3u, 5u, 7u, 9u}) {
        std::uniform_int_distribution<std::uint32_t> e(0, d - 1);
        for (int t = 0; t < 60; ++t) {
            const auto V = clifford_explicit(d, random_symplectic(d, rng), {e(rng), e(rng)}, e(rng));
            const Vec2 v{e(rng), e(rng)};
            const std::uint64_t f = std::uniform_int_distribution<std::uint64_t>(0, 3 * d)(rng);
            const auto c = conjugate_weyl(V, v, f);
            const auto Vf = pow_matrix(clifford_matrix(V), f);
            const auto phase =
                proportional_phase(Vf * weyl_matrix(d, v) * Vf.adjoint(), weyl_matrix(d, c.label), d, kTol);
            ASSERT_TRUE(phase.has_value());
            EXPECT_EQ(*phase, c.omega_exp);
        }
    }
}

TEST(ConjugateWeyl, GroupLawWithUnreducedPowers) {
    std::mt19937_64 rng(9);
    for (std::uint32_t d : {3u, 5u}) {
        std::uniform_int_distribution<std::uint32_t> e(0, d - 1);
        for (int t = 0; t < 50; ++t) {
            const auto V = clifford_explicit(d, random_symplectic(d, rng), {e(rng), e(rng)});
            const Vec2 v{e(rng), e(rng)};
            const std::uint64_t f1 = e(rng) + d, f2 = e(rng);
            const auto a = conjugate_weyl(V, v, f1);
            const auto b = conjugate_weyl(V, a.label, f2);
            const auto ab = conjugate_weyl(V, v, f1 + f2);
            EXPECT_EQ(ab.label, b.label);
            EXPECT_EQ(ab.omega_exp, (a.omega_exp + b.omega_exp) % d);
        }
    }
}

TEST(ConjugateWeyl, QubitExactLifts) {
    // The order-3 subgroup of Sp_2(Z_2) and Paulis lift with exact phases.
    const Mat2 lifts[3] = {{{{1, 0}, {0, 1}}}, {{{0, 1}, {1, 1}}}, {{{1, 1}, {1, 0}}}};
    for (const auto &C : lifts) {
        for (std::uint32_t x = 0; x < 4; ++x) {
            for (std::uint32_t t = 0; t < 4; ++t) {
                const auto V = clifford_explicit(2, C, {x & 1, x >> 1}, t);
                for (std::uint32_t vv = 0; vv < 4; ++vv) {
                    const Vec2 v{vv & 1, vv >> 1};
                    for (std::uint64_t f = 0; f < 6; ++f) {
                        const auto c = conjugate_weyl(V, v, f);
                        const auto Vf = pow_matrix(clifford_matrix(V), f);
                        const auto phase =
                            proportional_phase(Vf * weyl_matrix(2, v) * Vf.adjoint(), weyl_matrix(2, c.label), 2, kTol);
                        ASSERT_TRUE(phase.has_value());
                        EXPECT_EQ(*phase, c.omega_exp);
                    }
                }
            }
        }
    }
}

TEST(ConjugateWeyl, QubitSOutsideExactLiftDomain) {
    // S W_X maps X to Y for one step, but S Y S^dag = -X, so two steps leave the
    // phase formula's domain. Qubit plans only use settings 0 and 1.
    const auto V = clifford_explicit(2, {{{1, 1}, {0, 1}}}, {0, 1});
    const auto U = clifford_matrix(V);
    for (std::uint64_t f = 0; f <= 1; ++f) {
        for (const Vec2 v : {Vec2{1, 0}, Vec2{0, 1}}) {
            const auto c = conjugate_weyl(V, v, f);
            const auto Vf = pow_matrix(U, f);
            EXPECT_EQ(proportional_phase(Vf * weyl_matrix(2, v) * Vf.adjoint(), weyl_matrix(2, c.label), 2, kTol),
                      c.omega_exp);
        }
    }
    const auto c2 = conjugate_weyl(V, {0, 1}, 2);
    const auto V2 = pow_matrix(U, 2);
    EXPECT_NE(proportional_phase(V2 * weyl_matrix(2, {0, 1}) * V2.adjoint(), weyl_matrix(2, c2.label), 2, kTol),
              c2.omega_exp);
}

TEST(Dense, SnapToOmega) {
    EXPECT_EQ(snap_to_omega(zeta_power(4, 5), 5, kTol), 2u);
    EXPECT_FALSE(snap_to_omega(zeta_power(1, 5), 5, kTol).has_value());
}

}  // namespace
}  // namespace ldmbqc::weyl
