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

#ifndef LDMBQC_FIELD_POLY_H
#define LDMBQC_FIELD_POLY_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldmbqc/field/modulus.h"

namespace ldmbqc::field {

using Exponents = std::vector<std::uint32_t>;

/// A function F_d^n -> F_d (or Z_d^n -> Z_d) stored as its d^n values.
///
/// Inputs are ordered lexicographically with x_1 the most significant digit,
/// so index(x) = x_1 d^{n-1} + ... + x_n.
struct FunctionTable {
    Modulus modulus;
    std::uint32_t n = 0;
    std::vector<Element> values;

    static FunctionTable from_values(const Modulus &modulus, std::uint32_t n, std::vector<Element> values);

    std::size_t size() const {
        return values.size();
    }
    Element at(std::span<const Element> x) const;
    /// The input with the given lexicographic index.
    std::vector<Element> point(std::size_t index) const;
    bool operator==(const FunctionTable &other) const {
        return modulus == other.modulus && n == other.n && values == other.values;
    }
};

/// Number of inputs d^n, throwing GuardExceeded above `limit`.
std::size_t table_size(std::uint32_t d, std::uint32_t n, std::size_t limit = std::size_t{1} << 26);

/// Sparse multivariate polynomial with nonzero coefficients only.
///
/// Over a field every exponent is reduced into 0..d-1 using x^d = x. Over a
/// composite ring exponents are kept as given (the reduction is not valid there).
class MultiPoly {
   public:
    MultiPoly(Modulus modulus, std::uint32_t n) : modulus_(std::move(modulus)), n_(n) {
    }

    static MultiPoly constant(const Modulus &modulus, std::uint32_t n, Element c);
    /// The variable x_{index+1}.
    static MultiPoly variable(const Modulus &modulus, std::uint32_t n, std::uint32_t index);
    static MultiPoly monomial(const Modulus &modulus, Exponents exps, Element c);

    const Modulus &modulus() const {
        return modulus_;
    }
    std::uint32_t num_vars() const {
        return n_;
    }
    const std::map<Exponents, Element> &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    Element coefficient(const Exponents &exps) const;

    /// Adds c * x^exps, reducing the exponents first.
    void add_term(Exponents exps, Element c);

    MultiPoly operator+(const MultiPoly &other) const;
    MultiPoly operator-(const MultiPoly &other) const;
    MultiPoly operator*(const MultiPoly &other) const;
    MultiPoly scaled(Element c) const;
    MultiPoly pow(std::uint64_t e) const;

    Element evaluate(std::span<const Element> x) const;
    FunctionTable to_table() const;

    std::uint32_t partial_degree(std::uint32_t var) const;

    bool operator==(const MultiPoly &other) const {
        return modulus_ == other.modulus_ && n_ == other.n_ && terms_ == other.terms_;
    }
    bool operator<(const MultiPoly &other) const {
        return terms_ < other.terms_;
    }

    /// `d=<d>;n=<n>;{(a1,..,an):c,...}` with exponent tuples in ascending order.
    std::string to_text() const;
    static MultiPoly from_text(std::string_view text);
    /// Human-readable form, e.g. "1 + 1*x1*x2"; "0" for the zero polynomial.
    std::string pretty() const;

   private:
    void check_compatible(const MultiPoly &other) const;

    Modulus modulus_;
    std::uint32_t n_;
    std::map<Exponents, Element> terms_;
};

/// Max over monomials of the exponent sum; 0 for the zero and constant polynomials.
std::uint32_t combined_degree(const MultiPoly &g);

/// Membership in Omega_n(delta). Throws std::invalid_argument unless 1 <= delta <= n(d-1).
bool in_subspace(const MultiPoly &g, std::uint32_t delta);

/// prod_i (1 - (x_i - y_i)^{d-1}): 1 at x = y, 0 elsewhere. Fields only.
MultiPoly delta_poly(const Modulus &field, std::span<const Element> y);

/// The unique reduced polynomial with the given values. Fields only.
MultiPoly interpolate(const FunctionTable &table);

/// Exponent tuples with every entry <= d-1 and sum <= delta, ascending.
std::vector<Exponents> monomials_up_to(std::uint32_t d, std::uint32_t n, std::uint32_t delta);

/// Every polynomial in Omega_n(delta), in lexicographic order of coefficient vectors
/// over monomials_up_to(d, n, delta). Guarded at `limit` elements.
std::vector<MultiPoly> enumerate_subspace(const Modulus &field, std::uint32_t n, std::uint32_t delta,
                                          std::size_t limit = std::size_t{1} << 20);

struct ClosureLimits {
    std::size_t max_table = 81;
    std::size_t max_premaps = 1000000;
    std::size_t max_span = std::size_t{1} << 20;
};

/// The linear span of { g o A : A affine } together with the constants, i.e. the
/// set generated from g by affine pre- and post-processing and linear combination.
/// Sorted by coefficient map.
std::vector<MultiPoly> closure_generate(const MultiPoly &g, const ClosureLimits &limits = {});

/// A polynomial over Z_d with the given values, of minimal combined degree, if one exists.
std::optional<MultiPoly> is_polynomial_over_ring(const FunctionTable &table);

}  // namespace ldmbqc::field

#endif
