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

#include "ldmbqc/mbqc/plan.h"

#include "ldmbqc/errors.h"
#include "ldmbqc/weyl/dense.h"

namespace ldmbqc::mbqc {

Matrix zero_matrix(std::size_t rows, std::size_t cols) {
    return Matrix(rows, std::vector<std::uint32_t>(cols, 0));
}

const std::vector<Outcome> &TableResource::distribution(const Ket &q) const {
    auto it = behavior.find(q);
    if (it == behavior.end()) {
        std::string s;
        for (auto x : q) {
            s += (s.empty() ? "" : ",") + std::to_string(x);
        }
        throw PlanError("resource.table", "no behaviour for settings (" + s + ")");
    }
    return it->second;
}

namespace {

void check_matrix(const Matrix &M, std::size_t rows, std::size_t cols, std::uint32_t d, const std::string &name) {
    if (M.size() != rows) {
        throw PlanError(name, "expected " + std::to_string(rows) + " rows, got " + std::to_string(M.size()));
    }
    for (std::size_t r = 0; r < rows; ++r) {
        if (M[r].size() != cols) {
            throw PlanError(name + "[" + std::to_string(r) + "]",
                            "expected " + std::to_string(cols) + " entries, got " + std::to_string(M[r].size()));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (M[r][c] >= d) {
                throw PlanError(name + "[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                                "entry " + std::to_string(M[r][c]) + " is not reduced mod " + std::to_string(d));
            }
        }
    }
}

void check_vector(const std::vector<std::uint32_t> &v, std::size_t len, std::uint32_t d, const std::string &name) {
    if (v.size() != len) {
        throw PlanError(name, "expected length " + std::to_string(len) + ", got " + std::to_string(v.size()));
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (v[i] >= d) {
            throw PlanError(name + "[" + std::to_string(i) + "]", "entry not reduced mod " + std::to_string(d));
        }
    }
}

}  // namespace

void MbqcPlan::validate() const {
    if (d < 2) {
        throw PlanError("d", "must be at least 2");
    }
    check_matrix(Q, N, n, d, "Q");
    check_matrix(T, N, N, d, "T");
    check_vector(q0, N, d, "q0");
    check_vector(z, N, d, "z");
    if (s0 >= d) {
        throw PlanError("s0", "not reduced mod " + std::to_string(d));
    }
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = r; c < N; ++c) {
            if (T[r][c] != 0) {
                throw PlanError("T[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                                "T must be strictly lower triangular");
            }
        }
    }
    if (has_table_resource()) {
        const auto &t = table();
        if (t.d != d || t.N != N) {
            throw PlanError("resource", "table resource dimensions disagree with the plan");
        }
        if (!is_flat()) {
            throw PlanError("T", "table resources are only supported for temporally flat plans");
        }
        if (!parties.empty() && parties.size() != N) {
            throw PlanError("parties", "expected 0 or " + std::to_string(N) + " parties for a table resource");
        }
        for (const auto &[q, dist] : t.behavior) {
            check_vector(q, N, d, "resource.table.q");
            Rational total = 0;
            for (const auto &o : dist) {
                check_vector(o.m, N, d, "resource.table.outcomes.m");
                if (o.p < 0) {
                    throw PlanError("resource.table.outcomes.p", "negative probability");
                }
                total += o.p;
            }
            if (total != 1) {
                throw PlanError("resource.table.outcomes", "probabilities sum to " + to_string(total));
            }
        }
    } else {
        const auto &s = sparse();
        if (s.d() != d || s.num_sites() != N) {
            throw PlanError("resource", "state dimensions (d=" + std::to_string(s.d()) + ", N=" +
                                            std::to_string(s.num_sites()) + ") disagree with the plan");
        }
        if (parties.size() != N) {
            throw PlanError("parties", "expected " + std::to_string(N) + " parties, got " +
                                           std::to_string(parties.size()));
        }
    }
    for (std::size_t k = 0; k < parties.size(); ++k) {
        const auto &p = parties[k];
        const std::string path = "parties[" + std::to_string(k) + "]";
        if (p.fiducial.d != d || p.control.d() != d) {
            throw PlanError(path, "local dimension disagrees with the plan");
        }
        if (!weyl::check_symplectic(p.control.C.m, d)) {
            throw PlanError(path + ".control.C", "matrix is not symplectic");
        }
    }
}

bool MbqcPlan::is_flat() const {
    for (const auto &row : T) {
        for (auto x : row) {
            if (x != 0) {
                return false;
            }
        }
    }
    return true;
}

std::uint32_t MbqcPlan::setting(std::uint32_t k, const Ket &input, const Ket &outcomes) const {
    if (input.size() != n) {
        throw DimensionMismatch("input of length " + std::to_string(input.size()) + ", plan expects " +
                                std::to_string(n));
    }
    std::uint64_t q = q0.empty() ? 0 : q0[k];
    for (std::uint32_t j = 0; j < n; ++j) {
        q += static_cast<std::uint64_t>(Q[k][j]) * (input[j] % d);
    }
    for (std::uint32_t j = 0; j < k && j < outcomes.size(); ++j) {
        q += static_cast<std::uint64_t>(T[k][j]) * outcomes[j];
    }
    return static_cast<std::uint32_t>(q % d);
}

Ket MbqcPlan::flat_settings(const Ket &input) const {
    Ket q(N);
    for (std::uint32_t k = 0; k < N; ++k) {
        q[k] = setting(k, input, {});
    }
    return q;
}

std::uint32_t MbqcPlan::output(const Ket &outcomes) const {
    std::uint64_t o = s0;
    for (std::uint32_t k = 0; k < N; ++k) {
        o += static_cast<std::uint64_t>(z[k]) * outcomes.at(k);
    }
    return static_cast<std::uint32_t>(o % d);
}

state::MonomialMatrix MbqcPlan::local_observable(std::uint32_t k, std::uint32_t q) const {
    const auto &p = parties.at(k);
    const auto c = weyl::conjugate_weyl(p.control, p.fiducial.v, q);
    const std::uint32_t zeta = weyl::tau_to_zeta(p.fiducial.tau_exp, d) + 2 * c.omega_exp;
    return state::MonomialMatrix::weyl_zeta(d, c.label, zeta % (2 * d));
}

Eigen::MatrixXcd MbqcPlan::dense_local_observable(std::uint32_t k, std::uint32_t q) const {
    const auto &p = parties.at(k);
    const Eigen::MatrixXcd V = weyl::clifford_matrix(p.control);
    Eigen::MatrixXcd Vq = Eigen::MatrixXcd::Identity(d, d);
    for (std::uint32_t i = 0; i < q; ++i) {
        Vq = V * Vq;
    }
    return Vq * weyl::weyl_matrix(d, p.fiducial.v, p.fiducial.tau_exp) * Vq.adjoint();
}

}  // namespace ldmbqc::mbqc
