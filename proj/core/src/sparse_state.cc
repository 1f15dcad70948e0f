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

#include "ldmbqc/state/sparse_state.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "ldmbqc/errors.h"
#include "ldmbqc/state/cyclotomic.h"
#include "ldmbqc/weyl/weyl.h"

namespace ldmbqc::state {

SparseState::SparseState(std::uint32_t d, std::uint32_t N, std::vector<Term> terms)
    : d_(d), N_(N), terms_(std::move(terms)) {
    if (d < 2) {
        throw std::invalid_argument("local dimension must be at least 2");
    }
    if (terms_.empty()) {
        throw std::invalid_argument("a state needs at least one term");
    }
    for (auto &t : terms_) {
        if (t.ket.size() != N) {
            throw DimensionMismatch("ket of length " + std::to_string(t.ket.size()) + " in a " + std::to_string(N) +
                                    "-site state");
        }
        for (auto z : t.ket) {
            if (z >= d) {
                throw std::invalid_argument("ket digit " + std::to_string(z) + " out of range for d=" +
                                            std::to_string(d));
            }
        }
        t.zeta_exp %= 2 * d;
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) { return a.ket < b.ket; });
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        if (terms_[i].ket == terms_[i - 1].ket) {
            throw std::invalid_argument("duplicate ket in sparse state");
        }
    }
}

SparseState SparseState::from_tau_terms(std::uint32_t d, std::uint32_t N,
                                        const std::vector<std::pair<std::uint32_t, Ket>> &terms) {
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto &[tau, ket] : terms) {
        out.push_back(Term{weyl::tau_to_zeta(tau, d), ket});
    }
    return SparseState(d, N, std::move(out));
}

std::uint32_t SparseState::tau_exp(std::size_t t) const {
    return weyl::zeta_to_tau(terms_.at(t).zeta_exp, d_);
}

bool SparseState::equal_up_to_phase(const SparseState &other) const {
    if (d_ != other.d_ || N_ != other.N_ || terms_.size() != other.terms_.size()) {
        return false;
    }
    const std::uint32_t two_d = 2 * d_;
    std::uint32_t shift = (other.terms_[0].zeta_exp + two_d - terms_[0].zeta_exp) % two_d;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].ket != other.terms_[i].ket || (terms_[i].zeta_exp + shift) % two_d != other.terms_[i].zeta_exp) {
            return false;
        }
    }
    return true;
}

SparseState make_ghz(std::uint32_t d, std::uint32_t N, bool anders_browne) {
    if (anders_browne) {
        if (d != 2 || N != 3) {
            throw std::invalid_argument("the Anders-Browne state is defined for d=2, N=3");
        }
        // zeta = i for d = 2, so zeta^2 = -1.
        return SparseState(2, 3, {Term{0, {0, 0, 1}}, Term{2, {1, 1, 0}}});
    }
    if (N < 1) {
        throw std::invalid_argument("GHZ state needs at least one site");
    }
    std::vector<Term> terms;
    for (std::uint32_t z = 0; z < d; ++z) {
        terms.push_back(Term{0, Ket(N, z)});
    }
    return SparseState(d, N, std::move(terms));
}

SparseState make_example2_state(std::uint32_t d) {
    if (d < 3 || d % 2 == 0) {
        throw UnsupportedModulus("the two-copies-per-shift state needs odd d >= 3, got " + std::to_string(d));
    }
    std::vector<Term> terms;
    for (std::uint32_t z = 0; z < d; ++z) {
        Ket ket(2 * d);
        for (std::uint32_t s = 0; s < d; ++s) {
            ket[2 * s] = ket[2 * s + 1] = (z + s) % d;
        }
        terms.push_back(Term{0, std::move(ket)});
    }
    return SparseState(d, 2 * d, std::move(terms));
}

SparseState make_basis_state(std::uint32_t d, const Ket &ket) {
    return SparseState(d, static_cast<std::uint32_t>(ket.size()), {Term{0, ket}});
}

SparseState apply_observable(const GlobalObservable &M, const SparseState &psi) {
    if (M.num_sites() != psi.num_sites() || (M.num_sites() > 0 && M.d() != psi.d())) {
        throw DimensionMismatch("observable on " + std::to_string(M.num_sites()) + " sites applied to a " +
                                std::to_string(psi.num_sites()) + "-site state");
    }
    std::vector<Term> out;
    out.reserve(psi.num_terms());
    for (const auto &t : psi.terms()) {
        Term image{t.zeta_exp, Ket(t.ket.size())};
        for (std::size_t k = 0; k < t.ket.size(); ++k) {
            auto [ph, z] = M.site(k).apply(t.ket[k]);
            image.zeta_exp += ph;
            image.ket[k] = z;
        }
        out.push_back(std::move(image));
    }
    return SparseState(psi.d(), psi.num_sites(), std::move(out));
}

std::optional<std::uint32_t> eigenphase_of(const GlobalObservable &M, const SparseState &psi) {
    const SparseState image = apply_observable(M, psi);
    const std::uint32_t two_d = 2 * psi.d();
    const auto &a = psi.terms();
    const auto &b = image.terms();
    const std::uint32_t ratio = (b[0].zeta_exp + two_d - a[0].zeta_exp) % two_d;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].ket != b[i].ket || (a[i].zeta_exp + ratio) % two_d != b[i].zeta_exp) {
            return std::nullopt;
        }
    }
    auto o = weyl::zeta_to_omega(ratio, psi.d());
    if (!o) {
        throw PhaseDomainError("eigenvalue zeta^" + std::to_string(ratio) + " is not a power of omega");
    }
    return o;
}

std::vector<Branch> outcome_branches(const SparseState &psi, std::uint32_t site, const MonomialMatrix &M) {
    const std::uint32_t d = psi.d();
    if (site >= psi.num_sites()) {
        throw DimensionMismatch("site " + std::to_string(site) + " out of range");
    }
    if (M.d() != d) {
        throw DimensionMismatch("local observable dimension differs from the state's");
    }
    if (!M.has_omega_spectrum()) {
        throw PhaseDomainError("local observable has eigenvalues outside the d-th roots of unity");
    }
    const std::uint32_t two_d = 2 * d;
    std::vector<MonomialMatrix> powers;
    powers.reserve(d);
    powers.push_back(MonomialMatrix::identity(d));
    for (std::uint32_t k = 1; k < d; ++k) {
        powers.push_back(M * powers.back());
    }
    static thread_local std::map<std::uint32_t, ZetaReducer> reducers;
    auto it = reducers.find(d);
    if (it == reducers.end()) {
        it = reducers.emplace(d, ZetaReducer(d)).first;
    }
    const ZetaReducer &reducer = it->second;

    std::vector<Branch> out;
    const BigInt K = psi.num_terms();
    for (std::uint32_t m = 0; m < d; ++m) {
        // d * sqrt(K) * P_m |psi> as integer vectors over powers of zeta.
        std::map<Ket, std::vector<std::int64_t>> acc;
        for (const auto &t : psi.terms()) {
            for (std::uint32_t k = 0; k < d; ++k) {
                auto [ph, z] = powers[k].apply(t.ket[site]);
                Ket ket = t.ket;
                ket[site] = z;
                auto &vec = acc[ket];
                if (vec.empty()) {
                    vec.assign(two_d, 0);
                }
                const std::uint64_t e = (t.zeta_exp + ph + two_d * d - 2ull * m * k % two_d) % two_d;
                vec[e] += 1;
            }
        }
        std::vector<Term> terms;
        std::int64_t scale = 0;
        for (auto &[ket, vec] : acc) {
            auto red = reducer.reduce(vec);
            if (std::all_of(red.begin(), red.end(), [](std::int64_t c) { return c == 0; })) {
                continue;
            }
            auto mono = reducer.as_scaled_power(red);
            if (!mono || (scale != 0 && mono->first != scale)) {
                throw Error("post-measurement state is not an equal-magnitude superposition");
            }
            scale = mono->first;
            terms.push_back(Term{mono->second, ket});
        }
        if (terms.empty()) {
            continue;
        }
        const BigInt numer = BigInt(terms.size()) * scale * scale;
        const BigInt denom = K * d * d;
        out.push_back(Branch{m, Rational(numer, denom), SparseState(d, psi.num_sites(), std::move(terms))});
    }
    Rational total = 0;
    for (const auto &b : out) {
        total += b.probability;
    }
    if (total != 1) {
        throw Error("outcome probabilities sum to " + to_string(total) + ", not 1");
    }
    return out;
}

std::size_t sample_index(const std::vector<Rational> &probabilities, std::mt19937_64 &rng) {
    BigInt lcm = 1;
    for (const auto &p : probabilities) {
        const BigInt den = boost::multiprecision::denominator(p);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    if (lcm > BigInt(std::numeric_limits<std::uint64_t>::max())) {
        // Denominators beyond 64 bits: fall back to double precision.
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double r = uni(rng), cum = 0.0;
        for (std::size_t i = 0; i < probabilities.size(); ++i) {
            cum += to_double(probabilities[i]);
            if (r < cum) {
                return i;
            }
        }
        return probabilities.size() - 1;
    }
    const auto L = lcm.convert_to<std::uint64_t>();
    std::uniform_int_distribution<std::uint64_t> dist(0, L - 1);
    const std::uint64_t draw = dist(rng);
    std::uint64_t cum = 0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        cum += (probabilities[i] * L).convert_to<std::uint64_t>();
        if (draw < cum) {
            return i;
        }
    }
    return probabilities.size() - 1;
}

std::pair<std::uint32_t, SparseState> measure_local(const SparseState &psi, std::uint32_t site,
                                                    const MonomialMatrix &M, std::mt19937_64 &rng) {
    auto branches = outcome_branches(psi, site, M);
    std::vector<Rational> probs;
    probs.reserve(branches.size());
    for (const auto &b : branches) {
        probs.push_back(b.probability);
    }
    auto &chosen = branches[sample_index(probs, rng)];
    return {chosen.outcome, std::move(chosen.post)};
}

std::pair<std::uint32_t, SparseState> measure_local(const SparseState &psi, std::uint32_t site,
                                                    const MonomialMatrix &M, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return measure_local(psi, site, M, rng);
}

}  // namespace ldmbqc::state
