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

#include "ldmbqc/compiler/compiler.h"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "ldmbqc/errors.h"
#include "ldmbqc/field/modulus.h"
#include "ldmbqc/mbqc/engine.h"
#include "ldmbqc/state/sparse_state.h"

namespace ldmbqc {

VerificationFailed::VerificationFailed(std::vector<std::uint32_t> input_, std::uint32_t expected_,
                                       std::uint32_t actual_)
    : Error([&] {
          std::string s = "verification failed at input (";
          for (std::size_t i = 0; i < input_.size(); ++i) {
              s += (i ? "," : "") + std::to_string(input_[i]);
          }
          return s + "): expected " + std::to_string(expected_) + ", got " + std::to_string(actual_);
      }()),
      input(std::move(input_)),
      expected(expected_),
      actual(actual_) {
}

}  // namespace ldmbqc

namespace ldmbqc::compiler {

using field::reduce_mod;
using mbqc::MbqcPlan;
using mbqc::Party;

std::string to_string(Construction c) {
    switch (c) {
        case Construction::NandGhz:
            return "nand-ghz";
        case Construction::Quadratic:
            return "quadratic";
        case Construction::Exponential:
            return "exponential";
        case Construction::PrimeGeneral:
            return "prime-general";
        case Construction::OddRing:
            return "odd-ring";
        case Construction::Affine:
            return "affine";
    }
    return "affine";
}

std::uint32_t LinearSpec::eval(const std::vector<std::uint32_t> &i, std::uint32_t d) const {
    std::uint64_t s = c % d;
    for (std::size_t j = 0; j < a.size(); ++j) {
        s += static_cast<std::uint64_t>(a[j] % d) * i.at(j);
    }
    return static_cast<std::uint32_t>(s % d);
}

namespace {

field::FunctionTable tabulate(std::uint32_t d, std::uint32_t n,
                              const std::function<std::uint32_t(const std::vector<std::uint32_t> &)> &fn) {
    auto mod = field::Modulus::make(d);
    field::FunctionTable t{mod, n, std::vector<field::Element>(field::table_size(d, n), 0)};
    for (std::size_t idx = 0; idx < t.values.size(); ++idx) {
        t.values[idx] = fn(t.point(idx)) % d;
    }
    return t;
}

MbqcPlan empty_plan(std::uint32_t d, std::uint32_t n, std::uint32_t N) {
    MbqcPlan plan;
    plan.d = d;
    plan.n = n;
    plan.N = N;
    plan.Q = mbqc::zero_matrix(N, n);
    plan.T = mbqc::zero_matrix(N, N);
    plan.q0.assign(N, 0);
    plan.z.assign(N, 0);
    return plan;
}

CompileReport finish(MbqcPlan plan, Construction c, field::FunctionTable target) {
    plan.validate();
    CompileReport r{std::move(plan), 0, c, std::move(target), false};
    r.qudit_count = r.plan.N;
    verify(r);
    return r;
}

void check_table(const std::vector<std::uint32_t> &m, std::uint32_t d) {
    for (auto v : m) {
        if (v >= d) {
            throw std::invalid_argument("table entry " + std::to_string(v) + " is not reduced mod " +
                                        std::to_string(d));
        }
    }
}

std::uint32_t inverse_of_two(std::uint32_t d) {
    return static_cast<std::uint32_t>(*field::inverse_mod(2, d));
}

}  // namespace

CompileReport compile_nand() {
    MbqcPlan plan = empty_plan(2, 2, 3);
    plan.resource = state::make_ghz(2, 3, true);
    const auto control = weyl::clifford_explicit(2, {{{1, 1}, {0, 1}}}, {0, 1});
    for (int k = 0; k < 3; ++k) {
        plan.parties.push_back(Party{weyl::WeylLabel::x(2), control});
    }
    plan.Q = {{1, 0}, {0, 1}, {1, 1}};
    plan.z = {1, 1, 1};
    auto target = tabulate(2, 2, [](const auto &i) { return 1 - i[0] * i[1]; });
    return finish(std::move(plan), Construction::NandGhz, std::move(target));
}

CompileReport compile_quadratic(std::uint32_t d, const LinearSpec &f) {
    if (d < 3 || !field::is_prime(d)) {
        throw UnsupportedModulus("the quadratic construction needs an odd prime d, got " + std::to_string(d));
    }
    const std::uint32_t n = f.n();
    MbqcPlan plan = empty_plan(d, n, 2 * d);
    plan.resource = state::make_example2_state(d);
    for (std::uint32_t k = 0; k < 2 * d; ++k) {
        const auto control = k == 0 ? weyl::clifford_explicit(d, weyl::clifford_s(d).C.m, {0, d - 1}) : weyl::clifford_s(d);
        plan.parties.push_back(Party{weyl::WeylLabel::x(d), control});
        for (std::uint32_t j = 0; j < n; ++j) {
            plan.Q[k][j] = f.a[j] % d;
        }
        plan.q0[k] = f.c % d;
        plan.z[k] = 1;
    }
    auto target = tabulate(d, n, [&](const auto &i) {
        const std::uint64_t v = f.eval(i, d);
        const std::uint64_t half = *field::inverse_mod(2, d);
        return static_cast<std::uint32_t>(v * (v + d - 1) % d * half % d);
    });
    return finish(std::move(plan), Construction::Quadratic, std::move(target));
}

CompileReport compile_exponential(std::uint32_t d, std::uint32_t u, const LinearSpec &f) {
    const auto u_inv = field::inverse_mod(u % d, d);
    if (!u_inv) {
        throw std::invalid_argument("u=" + std::to_string(u) + " is not a unit mod " + std::to_string(d));
    }
    const std::uint32_t n = f.n();
    MbqcPlan plan = empty_plan(d, n, 1);
    plan.resource = state::make_basis_state(d, {1 % d});
    plan.parties.push_back(Party{weyl::WeylLabel::z(d), weyl::clifford_mu(d, u)});
    for (std::uint32_t j = 0; j < n; ++j) {
        plan.Q[0][j] = f.a[j] % d;
    }
    plan.q0[0] = f.c % d;
    plan.z[0] = 1;
    auto target = tabulate(d, n, [&](const auto &i) {
        return static_cast<std::uint32_t>(field::pow_mod(*u_inv, f.eval(i, d), d));
    });
    return finish(std::move(plan), Construction::Exponential, std::move(target));
}

std::uint32_t primitive_element(std::uint32_t p) {
    if (!field::is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    if (p == 2) {
        return 1;
    }
    const auto factors = field::factorize(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool generator = true;
        for (auto [q, e] : factors) {
            (void)e;
            if (field::pow_mod(g, (p - 1) / q, p) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) {
            return g;
        }
    }
    throw std::logic_error("no primitive element found");
}

CompileReport compile_general_prime(const std::vector<std::uint32_t> &m) {
    const auto p = static_cast<std::uint32_t>(m.size());
    if (!field::is_prime(p)) {
        throw UnsupportedModulus("compile_general_prime needs a table of prime length, got " + std::to_string(p));
    }
    check_table(m, p);
    auto target = tabulate(p, 1, [&](const auto &i) { return m[i[0]]; });
    if (p == 2) {
        // Every Z_2 function is affine: o = (m1 - m0) x + m0 from a Z measurement
        // on |0> conjugated by X^x.
        MbqcPlan plan = empty_plan(2, 1, 1);
        plan.resource = state::make_basis_state(2, {0});
        plan.parties.push_back(Party{weyl::WeylLabel::z(2), weyl::clifford_displacement(2, {0, 1})});
        plan.Q = {{1}};
        plan.z = {(m[1] + 2 - m[0]) % 2};
        plan.s0 = m[0];
        return finish(std::move(plan), Construction::Affine, std::move(target));
    }
    const std::uint32_t u = primitive_element(p);
    const std::uint32_t half = inverse_of_two(p);
    const std::uint32_t N = p * (p - 1) * (p - 1);
    MbqcPlan plan = empty_plan(p, 1, N);
    plan.resource = state::make_basis_state(p, state::Ket(N, 1));
    std::uint64_t s0 = 0;
    std::uint32_t party = 0;
    for (std::uint32_t j = 0; j < p; ++j) {
        const std::uint32_t weight = static_cast<std::uint32_t>(static_cast<std::uint64_t>(m[j]) * half % p);
        s0 += weight;
        for (std::uint32_t k = 1; k < p; ++k) {
            for (std::uint32_t l = 1; l < p; ++l) {
                // M_{u^{-l}} on |1> with setting q reports (u^{-l})^{-q} = u^{lq}; q = k(x - j).
                const auto ul_inv = static_cast<std::uint32_t>(field::pow_mod(u, (p - 1) - l % (p - 1), p));
                plan.parties.push_back(Party{weyl::WeylLabel::z(p), weyl::clifford_mu(p, ul_inv)});
                plan.Q[party][0] = k;
                plan.q0[party] = static_cast<std::uint32_t>(reduce_mod(-static_cast<std::int64_t>(k) * j, p));
                plan.z[party] = weight;
                ++party;
            }
        }
    }
    plan.s0 = static_cast<std::uint32_t>(s0 % p);
    return finish(std::move(plan), Construction::PrimeGeneral, std::move(target));
}

CompileReport compile_odd_ring(const std::vector<std::uint32_t> &m) {
    const auto d = static_cast<std::uint32_t>(m.size());
    if (d < 3 || d % 2 == 0) {
        throw UnsupportedModulus("the odd-ring construction needs odd d >= 3 (2 must be invertible), got d=" +
                                 std::to_string(d));
    }
    check_table(m, d);
    auto target = tabulate(d, 1, [&](const auto &i) { return m[i[0]]; });
    const std::uint32_t half = inverse_of_two(d);
    MbqcPlan plan = empty_plan(d, 1, 2 * d);
    plan.resource = state::make_basis_state(d, state::Ket(2 * d, 1));
    std::uint32_t party = 0;
    for (std::uint32_t j = 0; j < d; ++j) {
        const std::uint32_t weight = static_cast<std::uint32_t>(static_cast<std::uint64_t>(m[j]) * half % d);
        for (std::int64_t k : {1, -1}) {
            // (d-1)^2 = 1, so M_{d-1} reports (d-1)^{q} = +-1 by parity of q = +-(x - j).
            plan.parties.push_back(Party{weyl::WeylLabel::z(d), weyl::clifford_mu(d, d - 1)});
            plan.Q[party][0] = static_cast<std::uint32_t>(reduce_mod(k, d));
            plan.q0[party] = static_cast<std::uint32_t>(reduce_mod(-k * j, d));
            plan.z[party] = weight;
            ++party;
        }
    }
    return finish(std::move(plan), Construction::OddRing, std::move(target));
}

CompileReport compile_table(std::uint32_t d, const std::vector<std::uint32_t> &m, bool odd_ring) {
    if (m.size() != d) {
        throw std::invalid_argument("table has " + std::to_string(m.size()) + " entries, expected d=" +
                                    std::to_string(d));
    }
    if (odd_ring) {
        return compile_odd_ring(m);
    }
    if (field::is_prime(d)) {
        return compile_general_prime(m);
    }
    throw UnsupportedModulus("no construction for composite d=" + std::to_string(d) +
                             " without --odd-ring (odd d only)");
}

namespace {

std::optional<VerificationFailed> first_mismatch(const CompileReport &report) {
    field::FunctionTable actual = report.target;
    try {
        actual = mbqc::extract_output_function(report.plan).table;
    } catch (const NotDeterministic &) {
        // Report the first input whose output is random, with its most likely value.
        for (std::size_t idx = 0; idx < report.target.values.size(); ++idx) {
            const auto input = report.target.point(idx);
            auto dist = mbqc::output_distribution(report.plan, input);
            if (dist.size() != 1) {
                return VerificationFailed(input, report.target.values[idx], dist.front().first);
            }
        }
    }
    for (std::size_t idx = 0; idx < actual.values.size(); ++idx) {
        if (actual.values[idx] != report.target.values[idx]) {
            return VerificationFailed(report.target.point(idx), report.target.values[idx], actual.values[idx]);
        }
    }
    return std::nullopt;
}

}  // namespace

bool verify(CompileReport &report) {
    report.verified = !first_mismatch(report).has_value();
    return report.verified;
}

void verify_or_throw(CompileReport &report) {
    auto failure = first_mismatch(report);
    report.verified = !failure.has_value();
    if (failure) {
        throw *failure;
    }
}

ExponentialSumTable exponential_sum_table(std::uint32_t p) {
    if (p < 3 || p > 13 || !field::is_prime(p)) {
        throw std::invalid_argument("the exponential-sum table needs an odd prime p <= 13, got " + std::to_string(p));
    }
    ExponentialSumTable t{p, primitive_element(p), {}, std::vector<std::uint32_t>(p, 0)};
    const std::uint32_t inv = static_cast<std::uint32_t>(*field::inverse_mod(p - 1, p));
    for (std::uint32_t k = 1; k < p; ++k) {
        std::vector<std::uint32_t> row(p);
        for (std::uint32_t x = 0; x < p; ++x) {
            row[x] = static_cast<std::uint32_t>(field::pow_mod(t.u, static_cast<std::uint64_t>(k) * x, p));
        }
        t.rows.push_back(std::move(row));
    }
    for (std::uint32_t x = 0; x < p; ++x) {
        std::uint64_t s = 0;
        for (const auto &row : t.rows) {
            s += row[x];
        }
        t.sigma[x] = static_cast<std::uint32_t>(s % p * inv % p);
    }
    return t;
}

std::string format_exponential_sum_table(const ExponentialSumTable &t) {
    std::vector<std::pair<std::string, std::vector<std::uint32_t>>> lines;
    std::vector<std::uint32_t> xs(t.p);
    for (std::uint32_t x = 0; x < t.p; ++x) {
        xs[x] = x;
    }
    lines.emplace_back("x", xs);
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        const std::string exp = k == 0 ? "x" : std::to_string(k + 1) + "x";
        lines.emplace_back(std::to_string(t.u) + "^" + exp, t.rows[k]);
    }
    lines.emplace_back("sigma_" + std::to_string(t.p) + "(x)", t.sigma);
    std::size_t width = 0;
    for (const auto &[label, values] : lines) {
        width = std::max(width, label.size());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto &[label, values] = lines[i];
        out << std::left << std::setw(static_cast<int>(width)) << label << " |";
        for (auto v : values) {
            out << " " << v;
        }
        out << "\n";
        if (i == 0 || i + 2 == lines.size()) {
            out << std::string(width + 1, '-') << "+" << std::string(2 * values.size(), '-') << "\n";
        }
    }
    return out.str();
}

}  // namespace ldmbqc::compiler
