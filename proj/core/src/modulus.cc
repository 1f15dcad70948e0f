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

#include "ldmbqc/field/modulus.h"

#include <sstream>

#include "ldmbqc/errors.h"

namespace ldmbqc::field {

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        std::uint32_t e = 0;
        while (n % f == 0) {
            n /= f;
            ++e;
        }
        if (e > 0) {
            out.emplace_back(f, e);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) {
        return 0;
    }
    __extension__ typedef unsigned __int128 u128;
    u128 result = 1;
    u128 b = base % mod;
    while (exp > 0) {
        if (exp & 1) {
            result = result * b % mod;
        }
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    if (old_r != 1) {
        if (m == 1) {
            return 0;
        }
        return std::nullopt;
    }
    return reduce_mod(old_s, m);
}

namespace {

using UPoly = std::vector<std::uint32_t>;

void trim(UPoly &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

// Remainder of a modulo a monic b over Z_p.
UPoly poly_rem(UPoly a, const UPoly &b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
        }
        trim(a);
    }
    return a;
}

UPoly poly_mul_mod(const UPoly &a, const UPoly &b, const UPoly &m, std::uint32_t p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    UPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
        }
    }
    return poly_rem(std::move(prod), m, p);
}

UPoly digits(std::uint32_t v, std::uint32_t p, std::uint32_t r) {
    UPoly out(r, 0);
    for (std::uint32_t i = 0; i < r; ++i) {
        out[i] = v % p;
        v /= p;
    }
    return out;
}

std::uint32_t undigits(const UPoly &c, std::uint32_t p, std::uint32_t r) {
    std::uint32_t v = 0;
    for (std::uint32_t i = r; i-- > 0;) {
        v = v * p + (i < c.size() ? c[i] : 0);
    }
    return v;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
    UPoly f(coeffs.begin(), coeffs.end());
    trim(f);
    if (f.size() < 2 || f.back() != 1) {
        return false;
    }
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::uint32_t k = 1; 2 * k <= deg; ++k) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
            count *= p;
        }
        for (std::uint64_t low = 0; low < count; ++low) {
            UPoly g = digits(static_cast<std::uint32_t>(low), p, k);
            g.push_back(1);
            if (poly_rem(f, g, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

struct Modulus::Tables {
    std::vector<std::uint32_t> irreducible;
    std::vector<Element> exp;  // exp[k] = g^k, k in 0..q-2
    std::vector<std::uint32_t> log;
};

Modulus Modulus::make(std::uint32_t d) {
    if (d < 2) {
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(d));
    }
    Modulus m;
    m.d_ = d;
    auto factors = factorize(d);
    if (factors.size() != 1) {
        m.kind_ = Kind::CompositeRing;
        return m;
    }
    m.p_ = static_cast<std::uint32_t>(factors[0].first);
    m.r_ = factors[0].second;
    if (m.r_ == 1) {
        m.kind_ = Kind::PrimeField;
        return m;
    }
    m.kind_ = Kind::PrimePowerField;

    auto tables = std::make_shared<Tables>();
    const std::uint32_t p = m.p_, r = m.r_;
    for (std::uint32_t low = 0; low < d; ++low) {
        UPoly cand = digits(low, p, r);
        cand.push_back(1);
        if (is_irreducible_mod_p(cand, p)) {
            tables->irreducible = cand;
            break;
        }
    }

    // Find a generator of the multiplicative group and tabulate its powers.
    const std::uint32_t order = d - 1;
    auto prime_factors = factorize(order);
    for (std::uint32_t cand = 2; cand < d; ++cand) {
        UPoly g = digits(cand, p, r);
        trim(g);
        auto power = [&](std::uint64_t e) {
            UPoly acc{1};
            UPoly base = g;
            while (e > 0) {
                if (e & 1) {
                    acc = poly_mul_mod(acc, base, tables->irreducible, p);
                }
                base = poly_mul_mod(base, base, tables->irreducible, p);
                e >>= 1;
            }
            return acc;
        };
        bool generator = true;
        for (auto [q, e] : prime_factors) {
            (void)e;
            if (power(order / q) == UPoly{1}) {
                generator = false;
                break;
            }
        }
        if (!generator) {
            continue;
        }
        tables->exp.resize(order);
        tables->log.assign(d, 0);
        UPoly acc{1};
        for (std::uint32_t k = 0; k < order; ++k) {
            Element code = undigits(acc, p, r);
            tables->exp[k] = code;
            tables->log[code] = k;
            acc = poly_mul_mod(acc, g, tables->irreducible, p);
        }
        break;
    }
    m.tables_ = std::move(tables);
    return m;
}

const std::vector<std::uint32_t> &Modulus::irreducible() const {
    static const std::vector<std::uint32_t> empty;
    return tables_ ? tables_->irreducible : empty;
}

Element Modulus::add(Element a, Element b) const {
    if (kind_ != Kind::PrimePowerField) {
        return static_cast<Element>((static_cast<std::uint64_t>(a) + b) % d_);
    }
    Element out = 0, scale = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Element Modulus::neg(Element a) const {
    if (kind_ != Kind::PrimePowerField) {
        return a == 0 ? 0 : d_ - a;
    }
    Element out = 0, scale = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

Element Modulus::sub(Element a, Element b) const {
    return add(a, neg(b));
}

Element Modulus::mul(Element a, Element b) const {
    if (kind_ != Kind::PrimePowerField) {
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % d_);
    }
    if (a == 0 || b == 0) {
        return 0;
    }
    return tables_->exp[(tables_->log[a] + tables_->log[b]) % (d_ - 1)];
}

Element Modulus::pow(Element a, std::uint64_t e) const {
    Element result = 1;
    Element base = a;
    while (e > 0) {
        if (e & 1) {
            result = mul(result, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::optional<Element> Modulus::inverse(Element a) const {
    if (kind_ == Kind::PrimePowerField) {
        if (a == 0) {
            return std::nullopt;
        }
        return tables_->exp[(d_ - 1 - tables_->log[a]) % (d_ - 1)];
    }
    auto inv = inverse_mod(a, d_);
    if (!inv) {
        return std::nullopt;
    }
    return static_cast<Element>(*inv);
}

Element Modulus::from_int(std::int64_t v) const {
    if (kind_ == Kind::PrimePowerField) {
        return static_cast<Element>(reduce_mod(v, p_));
    }
    return static_cast<Element>(reduce_mod(v, d_));
}

std::vector<std::uint32_t> Modulus::coefficients(Element a) const {
    if (kind_ != Kind::PrimePowerField) {
        return {a};
    }
    return digits(a, p_, r_);
}

Element Modulus::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (kind_ != Kind::PrimePowerField) {
        return coeffs.empty() ? 0 : static_cast<Element>(coeffs[0] % d_);
    }
    UPoly c(coeffs.begin(), coeffs.end());
    for (auto &x : c) {
        x %= p_;
    }
    return undigits(c, p_, r_);
}

std::string Modulus::describe() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::PrimeField:
            out << "prime-field(" << d_ << ")";
            break;
        case Kind::CompositeRing:
            out << "composite-ring(" << d_ << ")";
            break;
        case Kind::PrimePowerField: {
            out << "prime-power-field(" << p_ << "," << r_ << ") mod ";
            const auto &f = irreducible();
            bool first = true;
            for (std::size_t i = f.size(); i-- > 0;) {
                if (f[i] == 0) {
                    continue;
                }
                if (!first) {
                    out << "+";
                }
                first = false;
                if (f[i] != 1 || i == 0) {
                    out << f[i];
                }
                if (i >= 1) {
                    out << "x";
                }
                if (i >= 2) {
                    out << "^" << i;
                }
            }
            break;
        }
    }
    return out.str();
}

}  // namespace ldmbqc::field
