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

#include "ldmbqc/mbqc/plan_io.h"

#include <json.hpp>
#include <set>

#include "ldmbqc/errors.h"

namespace ldmbqc::mbqc {

using ojson = nlohmann::ordered_json;

namespace {

ojson state_json(const state::SparseState &psi) {
    ojson terms = ojson::array();
    for (std::size_t t = 0; t < psi.num_terms(); ++t) {
        terms.push_back(ojson{{"tau_exp", psi.tau_exp(t)}, {"ket", psi.terms()[t].ket}});
    }
    return ojson{{"d", psi.d()}, {"N", psi.num_sites()}, {"terms", terms}};
}

ojson table_json(const TableResource &t) {
    ojson rows = ojson::array();
    for (const auto &[q, dist] : t.behavior) {
        ojson outs = ojson::array();
        for (const auto &o : dist) {
            outs.push_back(ojson{{"m", o.m}, {"p", to_string(o.p)}});
        }
        rows.push_back(ojson{{"q", q}, {"outcomes", outs}});
    }
    return ojson{{"table", rows}};
}

ojson control_json(const weyl::CliffordSpec &V) {
    using Named = weyl::CliffordSpec::Named;
    if (V.named == Named::S && V.x == weyl::Vec2{0, 0} && V.tau_exp == 0) {
        return ojson{{"named", "S"}};
    }
    if (V.named == Named::Mu && V.x == weyl::Vec2{0, 0} && V.tau_exp == 0) {
        return ojson{{"named", "Mu"}, {"u", V.u}};
    }
    ojson C = ojson::array();
    for (const auto &row : V.C.m) {
        C.push_back(ojson::array({row[0], row[1]}));
    }
    return ojson{{"C", C}, {"x", ojson::array({V.x[0], V.x[1]})}, {"tau_exp", V.tau_exp}};
}

// Reading helpers: every failure names its JSON path.

const nlohmann::json &member(const nlohmann::json &obj, const char *key, const std::string &path) {
    if (!obj.is_object()) {
        throw PlanError(path, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw PlanError(path.empty() ? key : path + "." + key, "missing field");
    }
    return *it;
}

void reject_unknown(const nlohmann::json &obj, std::initializer_list<const char *> allowed, const std::string &path) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!ok.count(it.key())) {
            throw PlanError(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
        }
    }
}

std::uint32_t get_uint(const nlohmann::json &v, const std::string &path) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw PlanError(path, "expected a non-negative integer");
    }
    const auto x = v.get<std::uint64_t>();
    if (x > 0xffffffffu) {
        throw PlanError(path, "integer too large");
    }
    return static_cast<std::uint32_t>(x);
}

std::vector<std::uint32_t> get_vec(const nlohmann::json &v, const std::string &path) {
    if (!v.is_array()) {
        throw PlanError(path, "expected an array");
    }
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(get_uint(v[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Matrix get_matrix(const nlohmann::json &v, const std::string &path) {
    if (!v.is_array()) {
        throw PlanError(path, "expected an array of rows");
    }
    Matrix out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(get_vec(v[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

weyl::Vec2 get_vec2(const nlohmann::json &v, std::uint32_t d, const std::string &path) {
    auto x = get_vec(v, path);
    if (x.size() != 2) {
        throw PlanError(path, "expected two entries");
    }
    if (x[0] >= d || x[1] >= d) {
        throw PlanError(path, "entries must be reduced mod " + std::to_string(d));
    }
    return {x[0], x[1]};
}

weyl::CliffordSpec get_control(const nlohmann::json &v, std::uint32_t d, const std::string &path) {
    if (!v.is_object()) {
        throw PlanError(path, "expected an object");
    }
    if (v.contains("named")) {
        const auto &name = v["named"];
        if (!name.is_string()) {
            throw PlanError(path + ".named", "expected a string");
        }
        const auto s = name.get<std::string>();
        if (s == "S") {
            reject_unknown(v, {"named"}, path);
            return weyl::clifford_s(d);
        }
        if (s == "Mu") {
            reject_unknown(v, {"named", "u"}, path);
            const auto u = get_uint(member(v, "u", path), path + ".u");
            try {
                return weyl::clifford_mu(d, u);
            } catch (const std::invalid_argument &e) {
                throw PlanError(path + ".u", e.what());
            }
        }
        throw PlanError(path + ".named", "unknown Clifford '" + s + "' (expected S or Mu)");
    }
    reject_unknown(v, {"C", "x", "tau_exp"}, path);
    auto C = get_matrix(member(v, "C", path), path + ".C");
    if (C.size() != 2 || C[0].size() != 2 || C[1].size() != 2) {
        throw PlanError(path + ".C", "expected a 2x2 matrix");
    }
    const auto x = get_vec2(member(v, "x", path), d, path + ".x");
    const auto t = get_uint(member(v, "tau_exp", path), path + ".tau_exp");
    try {
        return weyl::clifford_explicit(d, {{{C[0][0], C[0][1]}, {C[1][0], C[1][1]}}}, x, t);
    } catch (const std::invalid_argument &e) {
        throw PlanError(path + ".C", e.what());
    }
}

Resource get_resource(const nlohmann::json &v, std::uint32_t d, std::uint32_t N) {
    if (!v.is_object()) {
        throw PlanError("resource", "expected an object");
    }
    if (v.contains("table")) {
        reject_unknown(v, {"table"}, "resource");
        const auto &rows = v["table"];
        if (!rows.is_array()) {
            throw PlanError("resource.table", "expected an array");
        }
        TableResource t{d, N, {}};
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::string path = "resource.table[" + std::to_string(r) + "]";
            reject_unknown(rows[r], {"q", "outcomes"}, path);
            auto q = get_vec(member(rows[r], "q", path), path + ".q");
            const auto &outs = member(rows[r], "outcomes", path);
            if (!outs.is_array()) {
                throw PlanError(path + ".outcomes", "expected an array");
            }
            std::vector<Outcome> dist;
            for (std::size_t o = 0; o < outs.size(); ++o) {
                const std::string opath = path + ".outcomes[" + std::to_string(o) + "]";
                reject_unknown(outs[o], {"m", "p"}, opath);
                auto m = get_vec(member(outs[o], "m", opath), opath + ".m");
                const auto &p = member(outs[o], "p", opath);
                if (!p.is_string()) {
                    throw PlanError(opath + ".p", "expected a string \"num/den\"");
                }
                try {
                    dist.push_back(Outcome{std::move(m), parse_rational(p.get<std::string>())});
                } catch (const std::invalid_argument &e) {
                    throw PlanError(opath + ".p", e.what());
                }
            }
            if (!t.behavior.emplace(std::move(q), std::move(dist)).second) {
                throw PlanError(path + ".q", "duplicate settings row");
            }
        }
        return t;
    }
    reject_unknown(v, {"d", "N", "terms"}, "resource");
    const auto rd = get_uint(member(v, "d", "resource"), "resource.d");
    const auto rN = get_uint(member(v, "N", "resource"), "resource.N");
    if (rd != d || rN != N) {
        throw PlanError("resource", "state dimensions disagree with the plan");
    }
    const auto &terms = member(v, "terms", "resource");
    if (!terms.is_array()) {
        throw PlanError("resource.terms", "expected an array");
    }
    std::vector<std::pair<std::uint32_t, Ket>> raw;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string path = "resource.terms[" + std::to_string(t) + "]";
        reject_unknown(terms[t], {"tau_exp", "ket"}, path);
        raw.emplace_back(get_uint(member(terms[t], "tau_exp", path), path + ".tau_exp"),
                         get_vec(member(terms[t], "ket", path), path + ".ket"));
    }
    try {
        return state::SparseState::from_tau_terms(d, N, raw);
    } catch (const Error &e) {
        throw PlanError("resource.terms", e.what());
    } catch (const std::invalid_argument &e) {
        throw PlanError("resource.terms", e.what());
    }
}

}  // namespace

std::string serialize_state(const state::SparseState &psi) {
    return state_json(psi).dump(2);
}

std::string serialize_plan(const MbqcPlan &plan) {
    ojson j;
    j["d"] = plan.d;
    j["n"] = plan.n;
    j["N"] = plan.N;
    j["resource"] = plan.has_table_resource() ? table_json(plan.table()) : state_json(plan.sparse());
    ojson parties = ojson::array();
    for (const auto &p : plan.parties) {
        parties.push_back(ojson{
            {"fiducial", ojson{{"v", ojson::array({p.fiducial.v[0], p.fiducial.v[1]})}, {"tau_exp", p.fiducial.tau_exp}}},
            {"control", control_json(p.control)}});
    }
    j["parties"] = parties;
    j["Q"] = plan.Q;
    j["T"] = plan.T;
    if (std::any_of(plan.q0.begin(), plan.q0.end(), [](std::uint32_t x) { return x != 0; })) {
        j["q0"] = plan.q0;
    }
    j["z"] = plan.z;
    j["s0"] = plan.s0;
    return j.dump(2) + "\n";
}

MbqcPlan parse_plan(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw PlanError("line " + std::to_string(line) + ", column " + std::to_string(col), "syntax error");
    }
    reject_unknown(j, {"d", "n", "N", "resource", "parties", "Q", "T", "q0", "z", "s0"}, "");
    MbqcPlan plan;
    plan.d = get_uint(member(j, "d", ""), "d");
    if (plan.d < 2) {
        throw PlanError("d", "must be at least 2");
    }
    plan.n = get_uint(member(j, "n", ""), "n");
    plan.N = get_uint(member(j, "N", ""), "N");
    plan.resource = get_resource(member(j, "resource", ""), plan.d, plan.N);
    const auto &parties = member(j, "parties", "");
    if (!parties.is_array()) {
        throw PlanError("parties", "expected an array");
    }
    for (std::size_t k = 0; k < parties.size(); ++k) {
        const std::string path = "parties[" + std::to_string(k) + "]";
        reject_unknown(parties[k], {"fiducial", "control"}, path);
        const auto &fid = member(parties[k], "fiducial", path);
        reject_unknown(fid, {"v", "tau_exp"}, path + ".fiducial");
        Party p;
        const auto v = get_vec2(member(fid, "v", path + ".fiducial"), plan.d, path + ".fiducial.v");
        const auto t = get_uint(member(fid, "tau_exp", path + ".fiducial"), path + ".fiducial.tau_exp");
        p.fiducial = weyl::WeylLabel::make(plan.d, v[0], v[1], t);
        p.control = get_control(member(parties[k], "control", path), plan.d, path + ".control");
        plan.parties.push_back(std::move(p));
    }
    plan.Q = get_matrix(member(j, "Q", ""), "Q");
    plan.T = get_matrix(member(j, "T", ""), "T");
    plan.q0 = j.contains("q0") ? get_vec(j["q0"], "q0") : std::vector<std::uint32_t>(plan.N, 0);
    plan.z = get_vec(member(j, "z", ""), "z");
    plan.s0 = get_uint(member(j, "s0", ""), "s0");
    plan.validate();
    return plan;
}

}  // namespace ldmbqc::mbqc
