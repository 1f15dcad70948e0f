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

#include "ldmbqc/contextuality/contextuality.h"

#include <limits>
#include <map>
#include <sstream>

#include "ldmbqc/errors.h"
#include "ldmbqc/mbqc/engine.h"

namespace ldmbqc::contextuality {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::StronglyNonlocal:
            return "strongly-nonlocal";
        case Verdict::NcvaFound:
            return "ncva-found";
        case Verdict::Inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

std::string Witness::report() const {
    std::ostringstream out;
    out << "verdict: " << to_string(verdict) << "\n";
    if (monomial) {
        out << "degree: " << degree << " (d=" << d << ")\n";
        out << "monomial: (";
        for (std::size_t i = 0; i < monomial->size(); ++i) {
            out << (i ? "," : "") << (*monomial)[i];
        }
        out << ")\n";
    }
    if (assignment) {
        for (std::size_t k = 0; k < assignment->s.size(); ++k) {
            out << "s" << (k + 1) << ":";
            for (auto v : assignment->s[k]) {
                out << " " << v;
            }
            out << "\n";
        }
    }
    if (search_space > 0) {
        out << "search: " << excluded.str() << " of " << search_space.str() << " assignments excluded\n";
    }
    return out.str();
}

namespace {

Witness degree_verdict(const field::MultiPoly &o, std::uint32_t d) {
    Witness w;
    w.d = d;
    w.degree = field::combined_degree(o);
    for (const auto &[e, c] : o.terms()) {
        std::uint32_t s = 0;
        for (auto a : e) {
            s += a;
        }
        if (s == w.degree) {
            w.monomial = e;
            break;
        }
    }
    w.verdict = w.degree >= d ? Verdict::StronglyNonlocal : Verdict::Inconclusive;
    return w;
}

}  // namespace

Witness degree_witness(const field::MultiPoly &o) {
    if (o.modulus().kind() != field::Modulus::Kind::PrimeField) {
        throw UnsupportedModulus("degree_witness on a polynomial needs a prime modulus, got " +
                                 o.modulus().describe());
    }
    return degree_verdict(o, o.modulus().size());
}

Witness degree_witness(const field::FunctionTable &o) {
    switch (o.modulus.kind()) {
        case field::Modulus::Kind::PrimeField:
            return degree_verdict(field::interpolate(o), o.modulus.size());
        case field::Modulus::Kind::CompositeRing: {
            auto p = field::is_polynomial_over_ring(o);
            if (!p) {
                throw UnsupportedWitness("output table over Z_" + std::to_string(o.modulus.size()) +
                                         " is not a polynomial function");
            }
            return degree_verdict(*p, o.modulus.size());
        }
        case field::Modulus::Kind::PrimePowerField:
            break;
    }
    throw UnsupportedModulus("degree_witness: plan arithmetic is over Z_d, not " + o.modulus.describe());
}

NcvaInstance ncva_instance(const mbqc::MbqcPlan &plan) {
    plan.validate();
    if (!plan.is_flat()) {
        throw std::invalid_argument("ncva_search needs a temporally flat plan");
    }
    return NcvaInstance{plan.d,  plan.n, plan.N, plan.Q, plan.q0, plan.z, plan.s0,
                        mbqc::extract_output_function(plan).table};
}

namespace {

BigInt big_pow(std::uint64_t base, std::uint64_t e) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

struct Constraint {
    std::vector<std::pair<std::size_t, std::uint32_t>> vars;  // (variable, coefficient)
    std::uint32_t rhs = 0;                                    // sum coeff * value must equal rhs
};

class NcvaSearch {
   public:
    NcvaSearch(const NcvaInstance &inst) : inst_(inst), d_(inst.d) {
        // Variables: used (party, setting) pairs, ordered by party then setting.
        std::vector<std::vector<bool>> used(inst.N, std::vector<bool>(d_, false));
        const std::size_t inputs = inst.target.values.size();
        std::vector<std::vector<std::uint32_t>> settings(inputs);
        for (std::size_t idx = 0; idx < inputs; ++idx) {
            const auto input = inst.target.point(idx);
            settings[idx].resize(inst.N);
            for (std::uint32_t k = 0; k < inst.N; ++k) {
                std::uint64_t q = inst.q0.empty() ? 0 : inst.q0[k];
                for (std::uint32_t j = 0; j < inst.n; ++j) {
                    q += static_cast<std::uint64_t>(inst.Q[k][j]) * input[j];
                }
                settings[idx][k] = static_cast<std::uint32_t>(q % d_);
                used[k][settings[idx][k]] = true;
            }
        }
        var_of_.assign(inst.N, std::vector<std::size_t>(d_, SIZE_MAX));
        for (std::uint32_t k = 0; k < inst.N; ++k) {
            for (std::uint32_t q = 0; q < d_; ++q) {
                if (used[k][q]) {
                    var_of_[k][q] = vars_.size();
                    vars_.emplace_back(k, q);
                }
            }
        }
        touching_.resize(vars_.size());
        for (std::size_t idx = 0; idx < inputs; ++idx) {
            Constraint c;
            c.rhs = static_cast<std::uint32_t>((inst.target.values[idx] + d_ - inst.s0 % d_) % d_);
            for (std::uint32_t k = 0; k < inst.N; ++k) {
                if (inst.z[k] % d_ != 0) {
                    c.vars.emplace_back(var_of_[k][settings[idx][k]], inst.z[k] % d_);
                }
            }
            for (const auto &[v, coeff] : c.vars) {
                touching_[v].push_back(constraints_.size());
            }
            constraints_.push_back(std::move(c));
        }
        value_.assign(vars_.size(), 0);
        assigned_.assign(vars_.size(), false);
    }

    Witness solve() {
        Witness w;
        w.d = d_;
        // Constraints without variables are decided immediately.
        bool trivially_false = false;
        for (const auto &c : constraints_) {
            if (c.vars.empty() && c.rhs != 0) {
                trivially_false = true;
            }
        }
        const std::size_t unused = static_cast<std::size_t>(inst_.N) * d_ - vars_.size();
        w.search_space = big_pow(d_, static_cast<std::uint64_t>(inst_.N) * d_);
        if (!trivially_false && dfs(0)) {
            w.verdict = Verdict::NcvaFound;
            LocalAssignment a{d_, std::vector<std::vector<std::uint32_t>>(inst_.N, std::vector<std::uint32_t>(d_, 0))};
            for (std::size_t v = 0; v < vars_.size(); ++v) {
                a.s[vars_[v].first][vars_[v].second] = value_[v];
            }
            w.assignment = std::move(a);
            w.excluded = excluded_ * big_pow(d_, unused);
            return w;
        }
        w.verdict = Verdict::StronglyNonlocal;
        w.excluded = trivially_false ? w.search_space : excluded_ * big_pow(d_, unused);
        return w;
    }

   private:
    // False if some constraint touching v is already violated or cannot be met.
    bool consistent(std::size_t v) const {
        for (auto ci : touching_[v]) {
            const auto &c = constraints_[ci];
            std::uint64_t sum = 0;
            std::size_t free = 0;
            std::uint32_t free_coeff = 0;
            for (const auto &[u, coeff] : c.vars) {
                if (assigned_[u]) {
                    sum += static_cast<std::uint64_t>(coeff) * value_[u];
                } else {
                    ++free;
                    free_coeff = coeff;
                }
            }
            const std::uint32_t need = static_cast<std::uint32_t>((c.rhs + d_ - sum % d_) % d_);
            if (free == 0 && need != 0) {
                return false;
            }
            if (free == 1) {
                bool solvable = false;
                for (std::uint32_t s = 0; s < d_ && !solvable; ++s) {
                    solvable = (static_cast<std::uint64_t>(free_coeff) * s) % d_ == need;
                }
                if (!solvable) {
                    return false;
                }
            }
        }
        return true;
    }

    bool dfs(std::size_t depth) {
        if (depth == vars_.size()) {
            return true;
        }
        const BigInt subtree = big_pow(d_, vars_.size() - depth - 1);
        for (std::uint32_t a = 0; a < d_; ++a) {
            value_[depth] = a;
            assigned_[depth] = true;
            if (!consistent(depth)) {
                excluded_ += subtree;
            } else if (dfs(depth + 1)) {
                return true;
            }
        }
        assigned_[depth] = false;
        value_[depth] = 0;
        return false;
    }

    const NcvaInstance &inst_;
    std::uint32_t d_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> vars_;
    std::vector<std::vector<std::size_t>> var_of_;
    std::vector<Constraint> constraints_;
    std::vector<std::vector<std::size_t>> touching_;
    std::vector<std::uint32_t> value_;
    std::vector<bool> assigned_;
    BigInt excluded_ = 0;
};

}  // namespace

Witness ncva_search(const NcvaInstance &instance, std::uint64_t guard) {
    const std::uint32_t d = instance.d;
    BigInt size = BigInt(instance.N) * big_pow(d, d);
    if (size > guard) {
        throw GuardExceeded("ncva_search: N*d^d = " + size.str() + " exceeds guard " + std::to_string(guard));
    }
    if (instance.target.values.size() != field::table_size(d, instance.n) || instance.Q.size() != instance.N ||
        instance.z.size() != instance.N) {
        throw DimensionMismatch("ncva_search: instance dimensions are inconsistent");
    }
    return NcvaSearch(instance).solve();
}

Witness ncva_search(const mbqc::MbqcPlan &plan, std::uint64_t guard) {
    BigInt size = BigInt(plan.N) * big_pow(plan.d, plan.d);
    if (size > guard) {
        throw GuardExceeded("ncva_search: N*d^d = " + size.str() + " exceeds guard " + std::to_string(guard));
    }
    return ncva_search(ncva_instance(plan), guard);
}

std::uint64_t temporal_degree_bound(const mbqc::MbqcPlan &plan) {
    const std::uint32_t l = mbqc::longest_path(mbqc::temporal_graph(plan));
    std::uint64_t bound = 1;
    const std::uint64_t base = plan.d - 1;
    for (std::uint32_t i = 0; i < l; ++i) {
        if (base != 0 && bound > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        bound *= base;
    }
    return bound;
}

TemporalReport temporal_check(const mbqc::MbqcPlan &plan) {
    TemporalReport r;
    r.longest_path = mbqc::longest_path(mbqc::temporal_graph(plan));
    r.bound = temporal_degree_bound(plan);
    auto out = mbqc::extract_output_function(plan);
    if (out.poly) {
        r.degree = field::combined_degree(*out.poly);
        r.strongly_contextual = *r.degree > r.bound;
    }
    return r;
}

std::uint32_t delta_distance(std::uint32_t q, std::uint32_t d) {
    if (d != 2 && d % 2 == 0) {
        throw UnsupportedModulus("delta_distance is defined for odd d and d = 2, got d=" + std::to_string(d));
    }
    q %= d;
    return std::min(q, d - q == d ? 0 : d - q);
}

NuResult nu_distance(const field::FunctionTable &o, std::size_t guard) {
    const auto &mod = o.modulus;
    if (mod.kind() != field::Modulus::Kind::PrimeField) {
        throw UnsupportedModulus("nu_distance needs a prime modulus, got " + mod.describe());
    }
    const std::uint32_t d = mod.size();
    const std::uint32_t n = o.n;
    const auto monos = field::monomials_up_to(d, n, d - 1);
    const std::size_t count = field::table_size(d, static_cast<std::uint32_t>(monos.size()), guard);
    const std::size_t points = o.values.size();

    // Column tables of each monomial, then candidates as integer combinations.
    std::vector<std::vector<std::uint32_t>> mono_table(monos.size(), std::vector<std::uint32_t>(points));
    for (std::size_t k = 0; k < monos.size(); ++k) {
        auto m = field::MultiPoly::monomial(mod, monos[k], 1);
        mono_table[k] = m.to_table().values;
    }
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint32_t> best_coeffs;
    std::vector<std::uint32_t> coeffs(monos.size(), 0);
    std::vector<std::uint64_t> values(points);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rest = idx;
        for (std::size_t k = monos.size(); k-- > 0;) {
            coeffs[k] = static_cast<std::uint32_t>(rest % d);
            rest /= d;
        }
        std::uint64_t dist = 0;
        for (std::size_t x = 0; x < points && dist < best; ++x) {
            std::uint64_t v = 0;
            for (std::size_t k = 0; k < monos.size(); ++k) {
                v += static_cast<std::uint64_t>(coeffs[k]) * mono_table[k][x];
            }
            dist += delta_distance(static_cast<std::uint32_t>((o.values[x] + d - v % d) % d), d);
        }
        if (dist < best) {
            best = dist;
            best_coeffs = coeffs;
        }
    }
    field::MultiPoly minimizer(mod, n);
    for (std::size_t k = 0; k < monos.size(); ++k) {
        minimizer.add_term(monos[k], best_coeffs[k]);
    }
    return NuResult{best, std::move(minimizer)};
}

ThresholdReport threshold_check(const Rational &p_S, const Rational &p_bar_S, std::uint64_t nu, std::uint32_t d,
                                std::uint32_t n) {
    if (p_S < 0 || p_S > 1 || p_bar_S < 0 || p_bar_S > 1) {
        throw std::invalid_argument("probabilities must lie in [0, 1]");
    }
    if (d < 2) {
        throw std::invalid_argument("d must be at least 2");
    }
    ThresholdReport r;
    r.threshold = Rational(1) - Rational(BigInt(2) * nu, BigInt(d - 1) * big_pow(d, n));
    r.exceeded = p_S > r.threshold;
    if (nu > 0) {
        r.ncf_bound = (Rational(1) - p_bar_S) / Rational(BigInt(nu));
    }
    return r;
}

}  // namespace ldmbqc::contextuality
