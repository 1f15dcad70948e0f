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

#include "acceptance.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "ldmbqc/compiler/compiler.h"
#include "ldmbqc/contextuality/contextuality.h"
#include "ldmbqc/errors.h"
#include "ldmbqc/mbqc/engine.h"
#include "ldmbqc/weyl/dense.h"

namespace ldmbqc::acceptance {

namespace {

using compiler::CompileReport;
using contextuality::Verdict;
using field::Element;
using field::FunctionTable;
using field::Modulus;
using mbqc::MbqcPlan;

constexpr std::uint64_t kSeed = 20260101;
constexpr double kPhaseTolerance = 1e-9;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            detail.str("");
            detail << "FAILED: " << what;
        }
    }
};

std::string join(const std::vector<Element> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

// 1
void nand_reproduction(Check &c, const Options &) {
    auto r = compiler::compile_nand();
    const std::vector<Element> expected{1, 1, 1, 0};
    const auto analytic = mbqc::extract_output_function(r.plan).table.values;
    c.require(analytic == expected, "analytic table " + join(analytic) + " != 1,1,1,0");
    std::uint64_t runs = 0;
    for (std::size_t idx = 0; idx < 4; ++idx) {
        const mbqc::Ket input{static_cast<std::uint32_t>(idx >> 1), static_cast<std::uint32_t>(idx & 1)};
        for (std::uint64_t t = 0; t < 100; ++t) {
            const auto trace = mbqc::run(r.plan, input, kSeed + 100 * idx + t);
            c.require(trace.output == expected[idx], "simulated run at input " + join(input) + " gave " +
                                                         std::to_string(trace.output));
            ++runs;
        }
    }
    if (c.ok) {
        c.detail << "table 1,1,1,0 analytically and in " << runs << " seeded runs";
    }
}

// 2
void mermin(Check &c, const Options &) {
    const auto w = contextuality::ncva_search(compiler::compile_nand().plan);
    c.require(w.verdict == Verdict::StronglyNonlocal, "verdict " + contextuality::to_string(w.verdict));
    c.require(w.search_space == 64, "search space " + w.search_space.str() + " != 2^6");
    c.require(w.excluded == w.search_space, "excluded " + w.excluded.str() + " of " + w.search_space.str());
    if (c.ok) {
        c.detail << "strongly-nonlocal, " << w.excluded.str() << " of 64 assignments excluded";
    }
}

// 3
void quadratic_phase(Check &c, const Options &) {
    for (std::uint32_t d : {3u, 5u}) {
        auto r = compiler::compile_quadratic(d);
        std::vector<Element> expected(d);
        for (std::uint32_t i = 0; i < d; ++i) {
            expected[i] = (i == 0 ? 0 : i * (i - 1) / 2) % d;  // i(i-1)/2 as an integer, then mod d
        }
        const auto sparse = mbqc::extract_output_function(r.plan).table.values;
        c.require(sparse == expected, "d=" + std::to_string(d) + " sparse table " + join(sparse));
        if (d == 3) {
            const auto dense = mbqc::extract_output_function_dense(r.plan).values;
            c.require(dense == sparse, "d=3 dense table " + join(dense) + " disagrees with sparse");
        }
    }
    if (c.ok) {
        c.detail << "d=3 -> 0,0,1 (sparse = dense over 3^6 amplitudes); d=5 -> 0,0,1,3,1";
    }
}

// 4
void exponential_output(Check &c, const Options &) {
    auto r = compiler::compile_exponential(5, 2);
    const auto table = mbqc::extract_output_function(r.plan).table.values;
    c.require(table == std::vector<Element>{1, 3, 4, 2, 1}, "table " + join(table));
    const auto w = contextuality::ncva_search(r.plan);
    c.require(w.verdict == Verdict::NcvaFound, "verdict " + contextuality::to_string(w.verdict));
    if (c.ok) {
        c.detail << "table 1,3,4,2,1; ncva-found";
    }
}

// 5
void exponential_sums(Check &c, const Options &o) {
    const std::string path = o.golden_dir + "/exponential_sums_p5.txt";
    std::ifstream in(path, std::ios::binary);
    c.require(static_cast<bool>(in), "cannot read " + path);
    if (!c.ok) {
        return;
    }
    std::stringstream golden;
    golden << in.rdbuf();
    const auto table = compiler::exponential_sum_table(5);
    const auto text = compiler::format_exponential_sum_table(table);
    c.require(text == golden.str(), "formatted table differs from " + path);
    c.require(table.sigma == std::vector<std::uint32_t>{1, 0, 0, 0, 1}, "sigma_5 = " + join(table.sigma));
    if (c.ok) {
        c.detail << "byte-exact (" << text.size() << " bytes), sigma_5 = 1,0,0,0,1";
    }
}

// 6
void local_universality(Check &c, const Options &) {
    std::size_t verified = 0;
    for (std::uint32_t code = 0; code < 27; ++code) {
        const std::vector<std::uint32_t> m{code / 9, (code / 3) % 3, code % 3};
        auto r = compiler::compile_general_prime(m);
        c.require(r.verified && r.qudit_count == 12, "p=3 table " + join(m));
        verified += r.verified;
    }
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<std::uint32_t> digit(0, 4);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint32_t> m(5);
        for (auto &x : m) {
            x = digit(rng);
        }
        auto r = compiler::compile_general_prime(m);
        c.require(r.verified && r.qudit_count == 80, "p=5 table " + join(m));
        verified += r.verified;
    }
    if (c.ok) {
        c.detail << verified << " of 77 tables verified (27 for p=3 on 12 qudits, 50 for p=5 on 80 qudits)";
    }
}

// 7
void finite_field(Check &c, const Options &) {
    std::mt19937_64 rng(kSeed + 7);
    std::size_t total = 0;
    for (std::uint32_t q : {2u, 3u, 5u, 4u}) {
        const auto mod = Modulus::make(q);
        std::uniform_int_distribution<Element> value(0, q - 1);
        std::uniform_int_distribution<std::uint32_t> vars(1, 2);
        for (int t = 0; t < 200; ++t) {
            const auto n = vars(rng);
            std::vector<Element> values(field::table_size(q, n));
            for (auto &v : values) {
                v = value(rng);
            }
            const auto table = FunctionTable::from_values(mod, n, values);
            const auto p = field::interpolate(table);
            c.require(p.to_table() == table, "round trip failed for q=" + std::to_string(q));
            for (std::uint32_t var = 0; var < n; ++var) {
                c.require(p.partial_degree(var) <= q - 1, "partial degree above q-1 for q=" + std::to_string(q));
            }
            ++total;
        }
    }
    if (c.ok) {
        c.detail << total << " random tables over Z_2, Z_3, Z_5, GF(4) round-trip exactly";
    }
}

// Tables of span{ g(a x + b) : a, b } + span{1} by enumerating all coefficient vectors.
std::set<std::vector<Element>> brute_force_span(const field::MultiPoly &g) {
    const std::uint32_t d = g.modulus().size();
    std::vector<std::vector<Element>> gens{std::vector<Element>(d, 1)};
    for (Element a = 0; a < d; ++a) {
        for (Element b = 0; b < d; ++b) {
            std::vector<Element> t(d);
            for (Element x = 0; x < d; ++x) {
                const Element y = (a * x + b) % d;
                t[x] = g.evaluate(std::span<const Element>(&y, 1));
            }
            gens.push_back(t);
        }
    }
    std::set<std::vector<Element>> out;
    std::vector<Element> coeff(gens.size(), 0);
    while (true) {
        std::vector<Element> t(d, 0);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            for (Element x = 0; x < d; ++x) {
                t[x] = (t[x] + coeff[k] * gens[k][x]) % d;
            }
        }
        out.insert(t);
        std::size_t k = 0;
        while (k < coeff.size() && ++coeff[k] == d) {
            coeff[k++] = 0;
        }
        if (k == coeff.size()) {
            break;
        }
    }
    return out;
}

std::set<std::vector<Element>> tables_of(const std::vector<field::MultiPoly> &polys) {
    std::set<std::vector<Element>> out;
    for (const auto &p : polys) {
        out.insert(p.to_table().values);
    }
    return out;
}

// 8
void closure(Check &c, const Options &) {
    const auto f3 = Modulus::make(3);
    std::size_t checks = 0;
    for (std::uint32_t e : {1u, 2u}) {
        const auto g = field::MultiPoly::monomial(f3, {e}, 1);
        const auto generated = field::closure_generate(g);
        const auto omega = field::enumerate_subspace(f3, 1, e);
        c.require(generated.size() == omega.size() && tables_of(generated) == tables_of(omega),
                  "closure of x^" + std::to_string(e) + " != Omega_1(" + std::to_string(e) + ")");
        const auto oracle = brute_force_span(g);
        c.require(tables_of(generated) == oracle, "closure of x^" + std::to_string(e) + " disagrees with brute force");
        for (const auto &p : omega) {
            c.require(oracle.count(p.to_table().values) == 1, "Omega_1 member outside the brute-force span");
            ++checks;
        }
        c.require(omega.size() == (e == 1 ? 9u : 27u), "|Omega_1(" + std::to_string(e) + ")| = " +
                                                            std::to_string(omega.size()));
    }
    if (c.ok) {
        c.detail << "closure(x) = Omega_1(1) (9), closure(x^2) = Omega_1(2) (27); " << checks
                 << " membership checks against a brute-force span";
    }
}

MbqcPlan product_table_plan(std::uint32_t d, std::uint32_t n, std::uint32_t N, mbqc::Matrix Q,
                            const std::function<std::vector<mbqc::Outcome>(const mbqc::Ket &)> &behavior) {
    MbqcPlan plan;
    plan.d = d;
    plan.n = n;
    plan.N = N;
    mbqc::TableResource t{d, N, {}};
    mbqc::Ket q(N, 0);
    while (true) {
        t.behavior[q] = behavior(q);
        std::size_t k = 0;
        while (k < N && ++q[k] == d) {
            q[k++] = 0;
        }
        if (k == N) {
            break;
        }
    }
    plan.resource = std::move(t);
    for (std::uint32_t k = 0; k < N; ++k) {
        plan.parties.push_back(mbqc::Party{weyl::WeylLabel::z(d), weyl::clifford_displacement(d, {0, 0})});
    }
    plan.Q = std::move(Q);
    plan.T = mbqc::zero_matrix(N, N);
    plan.q0.assign(N, 0);
    plan.z.assign(N, 1);
    plan.validate();
    return plan;
}

// A qubit table resource with m1 + m2 + m3 = q1 q2 whenever q3 = q1 + q2, uniformly.
MbqcPlan and_table_plan() {
    return product_table_plan(2, 2, 3, {{1, 0}, {0, 1}, {1, 1}}, [](const mbqc::Ket &q) {
        const std::uint32_t parity = (q[2] == (q[0] ^ q[1])) ? q[0] * q[1] : 0;
        std::vector<mbqc::Outcome> out;
        for (std::uint32_t m0 = 0; m0 < 2; ++m0) {
            for (std::uint32_t m1 = 0; m1 < 2; ++m1) {
                out.push_back({{m0, m1, (parity + m0 + m1) % 2}, Rational(1, 4)});
            }
        }
        return out;
    });
}

// 9
void degree_consistency(Check &c, const Options &) {
    std::vector<std::pair<std::string, CompileReport>> plans;
    plans.emplace_back("quadratic d=3", compiler::compile_quadratic(3));
    plans.emplace_back("quadratic d=5", compiler::compile_quadratic(5));
    plans.emplace_back("exponential d=3 u=2", compiler::compile_exponential(3, 2));
    plans.emplace_back("exponential d=5 u=2", compiler::compile_exponential(5, 2));
    plans.emplace_back("exponential d=5 u=3", compiler::compile_exponential(5, 3));
    plans.emplace_back("prime-general p=3 delta", compiler::compile_general_prime({1, 0, 0}));
    plans.emplace_back("prime-general p=3 x^2", compiler::compile_general_prime({0, 1, 1}));
    plans.emplace_back("prime-general p=5 delta", compiler::compile_general_prime({1, 0, 0, 0, 0}));
    plans.emplace_back("odd-ring d=3 delta", compiler::compile_odd_ring({1, 0, 0}));
    plans.emplace_back("odd-ring d=9 identity", compiler::compile_odd_ring({0, 1, 2, 3, 4, 5, 6, 7, 8}));
    std::size_t searched = 0;
    for (auto &[name, r] : plans) {
        const auto table = mbqc::extract_output_function(r.plan).table;
        const auto rep = field::is_polynomial_over_ring(table);
        c.require(rep.has_value(), name + ": output is not polynomial");
        if (rep) {
            c.require(field::combined_degree(*rep) <= r.plan.d - 1,
                      name + ": degree " + std::to_string(field::combined_degree(*rep)));
        }
        const auto cost = static_cast<double>(r.plan.N) * std::pow(static_cast<double>(r.plan.d), r.plan.d);
        if (cost <= static_cast<double>(contextuality::kNcvaGuard)) {
            const auto w = contextuality::ncva_search(r.plan);
            c.require(w.verdict == Verdict::NcvaFound, name + ": ncva_search " + contextuality::to_string(w.verdict));
            ++searched;
        }
    }
    const auto and_plan = and_table_plan();
    const auto w = contextuality::ncva_search(and_plan);
    c.require(w.verdict == Verdict::StronglyNonlocal, "i1*i2 table resource: " + contextuality::to_string(w.verdict));
    c.require(w.excluded == w.search_space, "i1*i2 search not exhausted");
    if (c.ok) {
        c.detail << plans.size() << " compiled plans with degree <= d-1, " << searched
                 << " NCVAs found within guards; i1*i2 table resource strongly-nonlocal";
    }
}

// 10
void temporal(Check &c, const Options &) {
    MbqcPlan chain;
    chain.d = 3;
    chain.n = 1;
    chain.N = 2;
    chain.resource = state::make_basis_state(3, {1, 1});
    for (int k = 0; k < 2; ++k) {
        chain.parties.push_back(mbqc::Party{weyl::WeylLabel::z(3), weyl::clifford_mu(3, 2)});
    }
    chain.Q = {{1}, {0}};
    chain.T = {{0, 0}, {1, 0}};
    chain.q0 = {0, 0};
    chain.z = {0, 1};
    chain.validate();
    const auto chain_path = mbqc::longest_path(mbqc::temporal_graph(chain));
    const auto chain_bound = contextuality::temporal_degree_bound(chain);
    c.require(chain_path == 2 && chain_bound == 4, "chain: |l|=" + std::to_string(chain_path) + ", bound " +
                                                       std::to_string(chain_bound));
    const auto nand = compiler::compile_nand();
    const auto flat_bound = contextuality::temporal_degree_bound(nand.plan);
    c.require(flat_bound == 1, "flat qubit bound " + std::to_string(flat_bound));
    const auto report = contextuality::temporal_check(nand.plan);
    c.require(report.strongly_contextual, "flat NAND degree does not exceed the bound");
    if (c.ok) {
        c.detail << "chain d=3 |l|=2 -> bound 4; flat qubit -> bound 1, NAND degree "
                 << report.degree.value_or(0) << " exceeds it";
    }
}

// 11
void thresholds(Check &c, const Options &) {
    auto nand = compiler::compile_nand();
    const auto s = mbqc::empirical_success(nand.plan, nand.target, 1000, kSeed);
    const auto nu_nand = contextuality::nu_distance(nand.target);
    const auto flagged = contextuality::threshold_check(s.p_S, s.p_bar_S, nu_nand.nu, 2, 2);
    c.require(s.p_S == 1 && nu_nand.nu == 1, "NAND p_S = " + to_string(s.p_S) + ", nu = " + std::to_string(nu_nand.nu));
    c.require(flagged.exceeded, "NAND p_S = 1 not above threshold " + to_string(flagged.threshold));

    // o = x1^2 x2 over Z_3 from a table resource correct with probability 9/10.
    const auto f3 = Modulus::make(3);
    const auto target = field::MultiPoly::monomial(f3, {2, 1}, 1).to_table();
    auto noisy = product_table_plan(3, 2, 2, {{1, 0}, {0, 1}}, [&](const mbqc::Ket &q) {
        const Element o = target.at(q);
        return std::vector<mbqc::Outcome>{{{o, 0}, Rational(9, 10)}, {{(o + 1) % 3, 0}, Rational(1, 10)}};
    });
    const auto est = mbqc::empirical_success(noisy, target, 1000, kSeed);
    const auto nu = contextuality::nu_distance(target);
    const auto report = contextuality::threshold_check(est.p_S, est.p_bar_S, nu.nu, 3, 2);
    c.require(est.p_bar_S == Rational(9, 10), "noisy p_bar_S = " + to_string(est.p_bar_S));
    c.require(nu.nu == 2, "nu(x1^2 x2) = " + std::to_string(nu.nu));
    c.require(report.ncf_bound && *report.ncf_bound == Rational(1, 20),
              "NCF bound " + (report.ncf_bound ? to_string(*report.ncf_bound) : std::string("none")));
    if (c.ok) {
        c.detail << "NAND exceeds threshold " << to_string(flagged.threshold) << "; noisy x1^2 x2: p_bar_S = 9/10, nu = 2, NCF bound = "
                 << to_string(*report.ncf_bound);
    }
}

// C with det 1 over Z_d. For d = 2 only the order-3 subgroup lifts with exact phases.
std::array<std::array<std::uint32_t, 2>, 2> random_symplectic(std::uint32_t d, std::mt19937_64 &rng) {
    if (d == 2) {
        static const std::array<std::array<std::array<std::uint32_t, 2>, 2>, 3> lifts{
            {{{{1, 0}, {0, 1}}}, {{{0, 1}, {1, 1}}}, {{{1, 1}, {1, 0}}}}};
        return lifts[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
    }
    std::uniform_int_distribution<std::uint32_t> entry(0, d - 1);
    while (true) {
        std::array<std::array<std::uint32_t, 2>, 2> C{{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}}};
        if (weyl::check_symplectic(C, d)) {
            return C;
        }
    }
}

// 12
void phase_oracle(Check &c, const Options &) {
    std::mt19937_64 rng(kSeed + 12);
    const std::array<std::uint32_t, 3> dims{2, 3, 5};
    std::size_t matched = 0;
    const auto nand_control = compiler::compile_nand().plan.parties[0].control;
    for (int t = 0; t < 500; ++t) {
        const std::uint32_t d = dims[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
        std::uniform_int_distribution<std::uint32_t> entry(0, d - 1);
        weyl::CliffordSpec V;
        weyl::Vec2 v;
        std::uint64_t f_max = 2 * d;
        if (d == 2 && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
            // S Y S^dag = -X: the qubit S lifts exactly only for settings 0 and 1.
            V = nand_control;
            v = std::uniform_int_distribution<int>(0, 1)(rng) ? weyl::Vec2{1, 0} : weyl::Vec2{0, 1};
            f_max = 1;
        } else {
            V = weyl::clifford_explicit(d, random_symplectic(d, rng), {entry(rng), entry(rng)},
                                        std::uniform_int_distribution<std::uint32_t>(0, 2 * d - 1)(rng));
            v = {entry(rng), entry(rng)};
        }
        const auto f = std::uniform_int_distribution<std::uint64_t>(0, f_max)(rng);
        const auto conj = weyl::conjugate_weyl(V, v, f);
        Eigen::MatrixXcd Vf = Eigen::MatrixXcd::Identity(d, d);
        const Eigen::MatrixXcd Vd = weyl::clifford_matrix(V);
        for (std::uint64_t k = 0; k < f; ++k) {
            Vf = Vd * Vf;
        }
        const Eigen::MatrixXcd lhs = Vf * weyl::weyl_matrix(d, v) * Vf.adjoint();
        const auto phase = weyl::proportional_phase(lhs, weyl::weyl_matrix(d, conj.label), d, kPhaseTolerance);
        c.require(phase.has_value() && *phase == conj.omega_exp,
                  "d=" + std::to_string(d) + " trial " + std::to_string(t) + ": C=" + join({V.C.m[0][0], V.C.m[0][1], V.C.m[1][0], V.C.m[1][1]}) +
                      " x=" + join({V.x[0], V.x[1]}) + " tau=" + std::to_string(V.tau_exp) + " v=" + join({v[0], v[1]}) +
                      " f=" + std::to_string(f) + " formula " + std::to_string(conj.omega_exp) + " dense " +
                      (phase ? std::to_string(*phase) : std::string("none")));
        matched += phase.has_value() && *phase == conj.omega_exp;
    }
    if (c.ok) {
        c.detail << matched << " of 500 triples match within " << kPhaseTolerance;
    }
}

struct Criterion {
    const char *name;
    double budget_seconds;
    void (*fn)(Check &, const Options &);
};

const std::array<Criterion, kNumCriteria> kCriteria{{
    {"nand-reproduction", 1, nand_reproduction},
    {"mermin-strong-nonlocality", 1, mermin},
    {"quadratic-phase", 5, quadratic_phase},
    {"exponential-output", 1, exponential_output},
    {"exponential-sum-table", 1, exponential_sums},
    {"local-universality", 60, local_universality},
    {"finite-field-interpolation", 10, finite_field},
    {"linear-closure", 10, closure},
    {"degree-witness-consistency", 30, degree_consistency},
    {"temporal-bound", 1, temporal},
    {"probabilistic-thresholds", 10, thresholds},
    {"phase-formula-oracle", 30, phase_oracle},
}};

}  // namespace

std::vector<CriterionResult> run_all(const Options &options) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kNumCriteria; ++id) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
            continue;
        }
        const auto &crit = kCriteria[id - 1];
        CriterionResult r{id, crit.name, false, "", 0, crit.budget_seconds};
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            crit.fn(check, options);
        } catch (const std::exception &e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.require(r.seconds <= r.budget_seconds, "runtime over budget");
        r.passed = check.ok;
        r.detail = check.detail.str();
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_line(const CriterionResult &r) {
    char head[96];
    std::snprintf(head, sizeof head, "%s %02d %s (%.3f s, budget %g s): ", r.passed ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.seconds, r.budget_seconds);
    return head + r.detail;
}

}  // namespace ldmbqc::acceptance
