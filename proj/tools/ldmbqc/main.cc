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

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "acceptance.h"
#include "ldmbqc/compiler/compiler.h"
#include "ldmbqc/contextuality/contextuality.h"
#include "ldmbqc/errors.h"
#include "ldmbqc/mbqc/engine.h"
#include "ldmbqc/mbqc/plan_io.h"

namespace {

using namespace ldmbqc;
using ojson = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kUsage = 1, kCompileError = 2, kVerificationFailed = 3, kParseError = 4 };

std::string join(const std::vector<std::uint32_t> &v, const char *sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? sep : "") + std::to_string(v[i]);
    }
    return s;
}

void print_text(const ojson &j, std::ostream &out, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto &v = it.value();
        if (v.is_object()) {
            out << pad << it.key() << ":\n";
            print_text(v, out, indent + 2);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << pad << it.key() << ":\n";
            for (const auto &e : v) {
                out << pad << "  -";
                for (auto f = e.begin(); f != e.end(); ++f) {
                    out << " " << f.key() << "=" << (f.value().is_string() ? f.value().get<std::string>() : f.value().dump());
                }
                out << "\n";
            }
        } else if (v.is_array()) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                s += (i ? "," : "") + (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
            }
            out << pad << it.key() << ": " << s << "\n";
        } else {
            out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

void emit(const ojson &j, bool json) {
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        print_text(j, std::cout);
    }
}

ojson table_rows(const field::FunctionTable &t) {
    ojson rows = ojson::array();
    for (std::size_t idx = 0; idx < t.values.size(); ++idx) {
        rows.push_back(ojson{{"input", join(t.point(idx))}, {"output", t.values[idx]}});
    }
    return rows;
}

ojson witness_json(const contextuality::Witness &w) {
    ojson j{{"verdict", contextuality::to_string(w.verdict)}};
    if (w.monomial) {
        j["degree"] = w.degree;
        j["monomial"] = *w.monomial;
    }
    if (w.assignment) {
        ojson s = ojson::array();
        for (const auto &row : w.assignment->s) {
            s.push_back(join(row, " "));
        }
        j["assignment"] = s;
    }
    if (w.search_space > 0) {
        j["search"] = w.excluded.str() + " of " + w.search_space.str() + " assignments excluded";
    }
    return j;
}

bool within_ncva_guard(const mbqc::MbqcPlan &plan) {
    return static_cast<double>(plan.N) * std::pow(static_cast<double>(plan.d), plan.d) <=
           static_cast<double>(contextuality::kNcvaGuard);
}

// Output table, polynomial, degree witness and (within guards) NCVA search for a plan.
ojson analysis(const mbqc::MbqcPlan &plan) {
    ojson j;
    j["d"] = plan.d;
    j["n"] = plan.n;
    j["N"] = plan.N;
    j["flat"] = plan.is_flat();
    const auto path = mbqc::longest_path(mbqc::temporal_graph(plan));
    j["longest_path"] = path;
    j["temporal_bound"] = contextuality::temporal_degree_bound(plan);
    mbqc::OutputFunction out;
    try {
        out = mbqc::extract_output_function(plan);
    } catch (const NotDeterministic &e) {
        j["output"] = std::string("not deterministic: ") + e.what();
        return j;
    }
    j["table"] = join(out.table.values);
    j["outputs"] = table_rows(out.table);
    std::optional<field::MultiPoly> poly = out.poly;
    if (!poly) {
        poly = field::is_polynomial_over_ring(out.table);
    }
    if (poly) {
        j["polynomial"] = poly->pretty();
        j["degree"] = field::combined_degree(*poly);
    } else {
        j["polynomial"] = "none (not polynomial over Z_" + std::to_string(plan.d) + ")";
    }
    try {
        j["degree_witness"] = witness_json(contextuality::degree_witness(out.table));
    } catch (const Error &e) {
        j["degree_witness"] = ojson{{"verdict", "inconclusive"}, {"reason", e.what()}};
    }
    if (!plan.is_flat()) {
        j["ncva_search"] = ojson{{"verdict", "skipped"}, {"reason", "plan is not temporally flat"}};
    } else if (!within_ncva_guard(plan)) {
        j["ncva_search"] = ojson{{"verdict", "skipped"}, {"reason", "N d^d above guard"}};
    } else {
        j["ncva_search"] = witness_json(contextuality::ncva_search(plan));
    }
    return j;
}

ojson plan_summary(const compiler::CompileReport &r) {
    return ojson{{"construction", compiler::to_string(r.construction)},
                 {"qudits", r.qudit_count},
                 {"d", r.plan.d},
                 {"n", r.plan.n},
                 {"verified", r.verified}};
}

int cmd_demo(const std::string &name, std::uint32_t d, std::uint32_t u, std::uint64_t seed, bool json) {
    compiler::CompileReport r;
    try {
        if (name == "nand") {
            r = compiler::compile_nand();
        } else if (name == "quadratic") {
            r = compiler::compile_quadratic(d);
        } else {
            r = compiler::compile_exponential(d, u);
        }
    } catch (const std::exception &e) {
        std::cerr << "compile error: " << e.what() << "\n";
        return kCompileError;
    }
    ojson j{{"demo", name}};
    j["plan"] = plan_summary(r);
    j["analysis"] = analysis(r.plan);
    ojson runs = ojson::array();
    for (std::size_t idx = 0; idx < r.target.values.size(); ++idx) {
        const auto trace = mbqc::run(r.plan, r.target.point(idx), seed + idx);
        runs.push_back(ojson{{"input", join(trace.input)}, {"outcomes", join(trace.outcomes)}, {"output", trace.output}});
    }
    j["seed"] = seed;
    j["runs"] = runs;
    emit(j, json);
    return kOk;
}

std::vector<std::uint32_t> parse_table(const std::string &text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const auto v = std::stoul(item, &used);
        if (used != item.size()) {
            throw std::invalid_argument("bad table entry '" + item + "'");
        }
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

int cmd_compile(std::uint32_t d, const std::string &table, const std::string &out_path, bool odd_ring, bool json) {
    compiler::CompileReport r;
    try {
        r = compiler::compile_table(d, parse_table(table), odd_ring);
    } catch (const std::exception &e) {
        std::cerr << "compile error: " << e.what() << "\n";
        return kCompileError;
    }
    try {
        compiler::verify_or_throw(r);
    } catch (const VerificationFailed &e) {
        std::cerr << e.what() << "\n";
        return kVerificationFailed;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << mbqc::serialize_plan(r.plan);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return kCompileError;
    }
    ojson j = plan_summary(r);
    j["table"] = join(r.target.values);
    j["out"] = out_path;
    emit(j, json);
    return kOk;
}

int cmd_analyze(const std::string &path, bool json) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "parse error: cannot read " << path << "\n";
        return kParseError;
    }
    std::stringstream text;
    text << in.rdbuf();
    mbqc::MbqcPlan plan;
    try {
        plan = mbqc::parse_plan(text.str());
    } catch (const PlanError &e) {
        std::cerr << "parse error: " << path << ": " << e.what() << "\n";
        return kParseError;
    }
    ojson j{{"plan", path}};
    j["analysis"] = analysis(plan);
    emit(j, json);
    return kOk;
}

int cmd_table(std::uint32_t p, bool json) {
    compiler::ExponentialSumTable t;
    try {
        t = compiler::exponential_sum_table(p);
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    if (json) {
        std::cout << ojson{{"p", t.p}, {"u", t.u}, {"rows", t.rows}, {"sigma", t.sigma}}.dump(2) << "\n";
    } else {
        std::cout << compiler::format_exponential_sum_table(t);
    }
    return kOk;
}

int cmd_verify_all(const acceptance::Options &options, bool json) {
    const auto results = acceptance::run_all(options);
    int failed = 0;
    ojson rows = ojson::array();
    for (const auto &r : results) {
        failed += !r.passed;
        if (!json) {
            std::cout << acceptance::format_line(r) << "\n";
        }
        rows.push_back(ojson{{"id", r.id},
                             {"name", r.name},
                             {"passed", r.passed},
                             {"seconds", r.seconds},
                             {"budget_seconds", r.budget_seconds},
                             {"detail", r.detail}});
    }
    if (json) {
        std::cout << ojson{{"criteria", rows}, {"failed", failed}}.dump(2) << "\n";
    } else {
        std::cout << (failed ? "FAILED" : "ALL PASSED") << ": " << failed << " failing criteria\n";
    }
    return failed ? kVerificationFailed : kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"ldmbqc: linear-side-processing MBQC compiler and analyzer"};
    app.require_subcommand(1);
    bool json = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", json, "Machine-readable output");
    app.add_option("--seed", seed, "Seed for simulated runs")->capture_default_str();

    auto *demo = app.add_subcommand("demo", "Run one of the built-in examples");
    std::string demo_name;
    std::uint32_t demo_d = 3, demo_u = 2;
    demo->add_option("name", demo_name, "nand, quadratic or exponential")
        ->required()
        ->check(CLI::IsMember({"nand", "quadratic", "exponential"}));
    demo->add_option("--d", demo_d, "Qudit dimension")->capture_default_str();
    demo->add_option("--u", demo_u, "Unit for the exponential example")->capture_default_str();

    auto *compile = app.add_subcommand("compile", "Compile a function table Z_d -> Z_d into a plan file");
    std::uint32_t compile_d = 0;
    std::string compile_table, compile_out;
    bool odd_ring = false;
    compile->add_option("--d", compile_d, "Qudit dimension")->required();
    compile->add_option("--table", compile_table, "Comma-separated values m(0),...,m(d-1)")->required();
    compile->add_option("--out", compile_out, "Plan file to write")->required();
    compile->add_flag("--odd-ring", odd_ring, "Use the 2d-qudit construction (odd d)");

    auto *analyze = app.add_subcommand("analyze", "Analyze a plan file");
    std::string plan_path;
    analyze->add_option("--plan", plan_path, "Plan file")->required();

    auto *table = app.add_subcommand("table", "Print the exponential-sum table");
    bool sums_table = false;
    std::uint32_t table_p = 5;
    table->add_flag("--appendix-b", sums_table, "Exponential sums u^{kx} and sigma_p")->required();
    table->add_option("--p", table_p, "Odd prime <= 13")->capture_default_str();

    auto *verify_all = app.add_subcommand("verify-all", "Run the acceptance suite");
    acceptance::Options options;
    options.golden_dir = LDMBQC_GOLDEN_DIR;
    verify_all->add_option("--golden-dir", options.golden_dir, "Directory holding exponential_sums_p5.txt");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (demo->parsed()) {
        return cmd_demo(demo_name, demo_name == "nand" ? 2 : demo_d, demo_u, seed, json);
    }
    if (compile->parsed()) {
        return cmd_compile(compile_d, compile_table, compile_out, odd_ring, json);
    }
    if (analyze->parsed()) {
        return cmd_analyze(plan_path, json);
    }
    if (table->parsed()) {
        return cmd_table(table_p, json);
    }
    return cmd_verify_all(options, json);
}
