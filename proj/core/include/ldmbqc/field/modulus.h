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

#ifndef LDMBQC_FIELD_MODULUS_H
#define LDMBQC_FIELD_MODULUS_H

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ldmbqc::field {

/// Canonical representative of an element of Z_d or F_{p^r}.
///
/// For Z_d this is the integer in 0..d-1. For F_{p^r} it is the coefficient
/// vector (c_0, ..., c_{r-1}) of the polynomial-basis representation packed as
/// c_0 + c_1 p + ... + c_{r-1} p^{r-1}.
using Element = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m);

/// Reduces a signed integer into 0..m-1.
inline std::uint64_t reduce_mod(std::int64_t v, std::uint64_t m) {
    auto r = v % static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

/// The arithmetic of Z_d (d composite or prime) or of the field with d = p^r elements.
///
/// A Modulus is an immutable value; copies share their lookup tables.
class Modulus {
   public:
    enum class Kind { PrimeField, PrimePowerField, CompositeRing };

    /// Classifies d. Prime powers with r >= 2 get the lexicographically smallest
    /// monic irreducible polynomial of degree r over Z_p.
    static Modulus make(std::uint32_t d);

    std::uint32_t size() const {
        return d_;
    }
    Kind kind() const {
        return kind_;
    }
    bool is_field() const {
        return kind_ != Kind::CompositeRing;
    }
    /// p for fields; 0 for composite rings.
    std::uint32_t characteristic() const {
        return p_;
    }
    /// r for fields (1 for prime fields); 0 for composite rings.
    std::uint32_t extension_degree() const {
        return r_;
    }
    /// Monic irreducible polynomial, coefficients low to high (length r + 1).
    /// Empty unless kind() == PrimePowerField.
    const std::vector<std::uint32_t> &irreducible() const;

    Element zero() const {
        return 0;
    }
    Element one() const {
        return 1;
    }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element pow(Element a, std::uint64_t e) const;
    std::optional<Element> inverse(Element a) const;
    bool is_unit(Element a) const {
        return inverse(a).has_value();
    }

    /// Image of an integer under Z -> Z_d (or Z -> F_p inside F_{p^r}).
    Element from_int(std::int64_t v) const;

    /// Coefficient vector of a field element (length r); a single entry for Z_d.
    std::vector<std::uint32_t> coefficients(Element a) const;
    Element from_coefficients(std::span<const std::uint32_t> coeffs) const;

    std::string describe() const;

    bool operator==(const Modulus &other) const {
        return d_ == other.d_;
    }

   private:
    struct Tables;

    std::uint32_t d_ = 0;
    std::uint32_t p_ = 0;
    std::uint32_t r_ = 0;
    Kind kind_ = Kind::CompositeRing;
    std::shared_ptr<const Tables> tables_;
};

/// Same as Modulus::make.
inline Modulus make_field(std::uint32_t d) {
    return Modulus::make(d);
}

/// Monic irreducibility test over Z_p for a polynomial given low to high.
bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p);

}  // namespace ldmbqc::field

#endif
