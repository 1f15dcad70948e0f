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

#include "ldmbqc/field/poly.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ldmbqc/errors.h"
#include "ldmbqc/field/linalg.h"

namespace ldmbqc::field {

std::size_t table_size(std::uint32_t d, std::uint32_t n, std::size_t limit) {
    std::size_t size = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (size > limit / d) {
            throw GuardExceeded("input space " + std::to_string(d) + "^" + std::to_string(n) + " exceeds limit " +
                                std::to_string(limit));
        }
        size *= d;
    }
    return size;
}

FunctionTable FunctionTable::from_values(const Modulus &modulus, std::uint32_t n, std::vector<Element> values) {
    const std::size_t expected = table_size(modulus.size(), n);
    if (values.size() != expected) {
        throw DimensionMismatch("function table over " + modulus.describe() + " with n=" + std::to_string(n) +
                                " needs " + std::to_string(expected) + " entries, got " +
                                std::to_string(values.size()));
    }
    for (auto v : values) {
        if (v >= modulus.size()) {
            throw std::invalid_argument("table value " + std::to_string(v) + " is not a canonical representative mod " +
                                        std::to_string(modulus.size()));
        }
    }
    return FunctionTable{modulus, n, std::move(values)};
}

Element FunctionTable::at(std::span<const Element> x) const {
    std::size_t index = 0;
    for (auto xi : x) {
        index = index * modulus.size() + xi;
    }
    return values.at(index);
}

std::vector<Element> FunctionTable::point(std::size_t index) const {
    std::vector<Element> x(n, 0);
    for (std::uint32_t i = n; i-- > 0;) {
        x[i] = static_cast<Element>(index % modulus.size());
        index /= modulus.size();
    }
    return x;
}

MultiPoly MultiPoly::constant(const Modulus &modulus, std::uint32_t n, Element c) {
    MultiPoly p(modulus, n);
    p.add_term(Exponents(n, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const Modulus &modulus, std::uint32_t n, std::uint32_t index) {
    Exponents e(n, 0);
    e.at(index) = 1;
    MultiPoly p(modulus, n);
    p.add_term(std::move(e), 1);
    return p;
}

MultiPoly MultiPoly::monomial(const Modulus &modulus, Exponents exps, Element c) {
    MultiPoly p(modulus, static_cast<std::uint32_t>(exps.size()));
    p.add_term(std::move(exps), c);
    return p;
}

Element MultiPoly::coefficient(const Exponents &exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(Exponents exps, Element c) {
    if (exps.size() != n_) {
        throw DimensionMismatch("monomial has " + std::to_string(exps.size()) + " exponents, polynomial has " +
                                std::to_string(n_) + " variables");
    }
    if (modulus_.is_field()) {
        const std::uint32_t q = modulus_.size();
        for (auto &e : exps) {
            while (e >= q) {
                e -= q - 1;
            }
        }
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(std::move(exps), c);
    if (!inserted) {
        it->second = modulus_.add(it->second, c);
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void MultiPoly::check_compatible(const MultiPoly &other) const {
    if (!(modulus_ == other.modulus_) || n_ != other.n_) {
        throw DimensionMismatch("polynomials live in different rings");
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly &other) const {
    check_compatible(other);
    MultiPoly out = *this;
    for (const auto &[e, c] : other.terms_) {
        out.add_term(e, c);
    }
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly &other) const {
    check_compatible(other);
    MultiPoly out = *this;
    for (const auto &[e, c] : other.terms_) {
        out.add_term(e, modulus_.neg(c));
    }
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly &other) const {
    check_compatible(other);
    MultiPoly out(modulus_, n_);
    for (const auto &[e1, c1] : terms_) {
        for (const auto &[e2, c2] : other.terms_) {
            Exponents e(n_);
            for (std::uint32_t i = 0; i < n_; ++i) {
                e[i] = e1[i] + e2[i];
            }
            out.add_term(std::move(e), modulus_.mul(c1, c2));
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(Element c) const {
    MultiPoly out(modulus_, n_);
    for (const auto &[e, v] : terms_) {
        out.add_term(e, modulus_.mul(v, c));
    }
    return out;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
    MultiPoly result = constant(modulus_, n_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Element MultiPoly::evaluate(std::span<const Element> x) const {
    if (x.size() != n_) {
        throw DimensionMismatch("evaluating a " + std::to_string(n_) + "-variable polynomial at a point of length " +
                                std::to_string(x.size()));
    }
    Element acc = 0;
    for (const auto &[e, c] : terms_) {
        Element term = c;
        for (std::uint32_t i = 0; i < n_ && term != 0; ++i) {
            if (e[i] > 0) {
                term = modulus_.mul(term, modulus_.pow(x[i], e[i]));
            }
        }
        acc = modulus_.add(acc, term);
    }
    return acc;
}

FunctionTable MultiPoly::to_table() const {
    FunctionTable t{modulus_, n_, {}};
    const std::size_t size = table_size(modulus_.size(), n_);
    t.values.resize(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
        auto x = t.point(idx);
        t.values[idx] = evaluate(x);
    }
    return t;
}

std::uint32_t MultiPoly::partial_degree(std::uint32_t var) const {
    std::uint32_t deg = 0;
    for (const auto &[e, c] : terms_) {
        deg = std::max(deg, e.at(var));
    }
    return deg;
}

std::string MultiPoly::to_text() const {
    std::ostringstream out;
    out << "d=" << modulus_.size() << ";n=" << n_ << ";{";
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (!first) {
            out << ",";
        }
        first = false;
        out << "(";
        for (std::uint32_t i = 0; i < n_; ++i) {
            out << (i ? "," : "") << e[i];
        }
        out << "):" << c;
    }
    out << "}";
    return out.str();
}

namespace {

std::uint64_t parse_uint(std::string_view text, std::size_t &pos) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) {
        throw std::invalid_argument("polynomial text: expected integer at offset " + std::to_string(pos));
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
}

void expect(std::string_view text, std::size_t &pos, std::string_view token) {
    if (text.substr(pos, token.size()) != token) {
        throw std::invalid_argument("polynomial text: expected '" + std::string(token) + "' at offset " +
                                    std::to_string(pos));
    }
    pos += token.size();
}

}  // namespace

MultiPoly MultiPoly::from_text(std::string_view text) {
    std::size_t pos = 0;
    expect(text, pos, "d=");
    auto d = static_cast<std::uint32_t>(parse_uint(text, pos));
    expect(text, pos, ";n=");
    auto n = static_cast<std::uint32_t>(parse_uint(text, pos));
    expect(text, pos, ";{");
    MultiPoly p(Modulus::make(d), n);
    while (pos < text.size() && text[pos] != '}') {
        if (!p.terms_.empty()) {
            expect(text, pos, ",");
        }
        expect(text, pos, "(");
        Exponents e;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (i) {
                expect(text, pos, ",");
            }
            e.push_back(static_cast<std::uint32_t>(parse_uint(text, pos)));
        }
        expect(text, pos, "):");
        auto c = parse_uint(text, pos);
        if (c >= d) {
            throw std::invalid_argument("polynomial text: coefficient " + std::to_string(c) + " out of range");
        }
        p.add_term(std::move(e), static_cast<Element>(c));
    }
    expect(text, pos, "}");
    if (pos != text.size()) {
        throw std::invalid_argument("polynomial text: trailing characters at offset " + std::to_string(pos));
    }
    return p;
}

std::string MultiPoly::pretty() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << c;
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (e[i] == 0) {
                continue;
            }
            out << "*x" << (i + 1);
            if (e[i] > 1) {
                out << "^" << e[i];
            }
        }
    }
    return out.str();
}

std::uint32_t combined_degree(const MultiPoly &g) {
    std::uint32_t deg = 0;
    for (const auto &[e, c] : g.terms()) {
        std::uint32_t s = 0;
        for (auto a : e) {
            s += a;
        }
        deg = std::max(deg, s);
    }
    return deg;
}

bool in_subspace(const MultiPoly &g, std::uint32_t delta) {
    const std::uint32_t max_delta = g.num_vars() * (g.modulus().size() - 1);
    if (delta < 1 || delta > max_delta) {
        throw std::invalid_argument("delta " + std::to_string(delta) + " outside 1.." + std::to_string(max_delta));
    }
    return combined_degree(g) <= delta;
}

MultiPoly delta_poly(const Modulus &field, std::span<const Element> y) {
    if (!field.is_field()) {
        throw UnsupportedModulus("delta_poly requires a field, got " + field.describe());
    }
    const auto n = static_cast<std::uint32_t>(y.size());
    MultiPoly result = MultiPoly::constant(field, n, 1);
    MultiPoly one = MultiPoly::constant(field, n, 1);
    for (std::uint32_t i = 0; i < n; ++i) {
        MultiPoly shifted = MultiPoly::variable(field, n, i) - MultiPoly::constant(field, n, y[i]);
        result = result * (one - shifted.pow(field.size() - 1));
    }
    return result;
}

namespace {

// basis[y][a]: coefficient of x^a in the univariate indicator of y.
std::vector<std::vector<Element>> univariate_delta_basis(const Modulus &field) {
    const std::uint32_t q = field.size();
    std::vector<std::vector<Element>> basis(q);
    for (Element y = 0; y < q; ++y) {
        Element y_code = y;
        // (x - y)^{q-1} by repeated multiplication; degree stays <= q-1.
        std::vector<Element> power{1};
        for (std::uint32_t k = 0; k + 1 < q; ++k) {
            std::vector<Element> next(power.size() + 1, 0);
            for (std::size_t a = 0; a < power.size(); ++a) {
                next[a + 1] = field.add(next[a + 1], power[a]);
                next[a] = field.sub(next[a], field.mul(y_code, power[a]));
            }
            power = std::move(next);
        }
        power.resize(q, 0);
        std::vector<Element> row(q, 0);
        for (std::uint32_t a = 0; a < q; ++a) {
            row[a] = field.neg(power[a]);
        }
        row[0] = field.add(row[0], 1);
        basis[y] = std::move(row);
    }
    return basis;
}

}  // namespace

MultiPoly interpolate(const FunctionTable &table) {
    const Modulus &field = table.modulus;
    if (!field.is_field()) {
        throw UnsupportedModulus("interpolate requires a field, got " + field.describe());
    }
    const std::uint32_t q = field.size();
    const std::uint32_t n = table.n;
    const std::size_t size = table_size(q, n);
    if (table.values.size() != size) {
        throw DimensionMismatch("incomplete function table: expected " + std::to_string(size) + " entries, got " +
                                std::to_string(table.values.size()));
    }
    auto basis = univariate_delta_basis(field);
    std::vector<Element> coeffs = table.values;
    // Transform one axis at a time: values along the axis -> coefficients.
    std::size_t stride = 1;
    for (std::uint32_t axis = 0; axis < n; ++axis) {
        std::vector<Element> next(size, 0);
        for (std::size_t idx = 0; idx < size; ++idx) {
            const std::size_t digit = (idx / stride) % q;
            const std::size_t base = idx - digit * stride;
            Element acc = 0;
            for (std::uint32_t y = 0; y < q; ++y) {
                acc = field.add(acc, field.mul(coeffs[base + y * stride], basis[y][digit]));
            }
            next[idx] = acc;
        }
        coeffs = std::move(next);
        stride *= q;
    }
    MultiPoly p(field, n);
    for (std::size_t idx = 0; idx < size; ++idx) {
        if (coeffs[idx] != 0) {
            auto e = table.point(idx);
            p.add_term(Exponents(e.begin(), e.end()), coeffs[idx]);
        }
    }
    return p;
}

std::vector<Exponents> monomials_up_to(std::uint32_t d, std::uint32_t n, std::uint32_t delta) {
    std::vector<Exponents> out;
    Exponents e(n, 0);
    const std::size_t total = table_size(d, n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        std::uint32_t sum = 0;
        for (std::uint32_t i = n; i-- > 0;) {
            e[i] = static_cast<std::uint32_t>(rest % d);
            rest /= d;
            sum += e[i];
        }
        if (sum <= delta) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<MultiPoly> enumerate_subspace(const Modulus &field, std::uint32_t n, std::uint32_t delta,
                                          std::size_t limit) {
    const std::uint32_t q = field.size();
    auto monos = monomials_up_to(q, n, delta);
    const std::size_t count = table_size(q, static_cast<std::uint32_t>(monos.size()), limit);
    std::vector<MultiPoly> out;
    out.reserve(count);
    std::vector<Element> digits(monos.size(), 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rest = idx;
        for (std::size_t k = monos.size(); k-- > 0;) {
            digits[k] = static_cast<Element>(rest % q);
            rest /= q;
        }
        MultiPoly p(field, n);
        for (std::size_t k = 0; k < monos.size(); ++k) {
            p.add_term(monos[k], digits[k]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<MultiPoly> closure_generate(const MultiPoly &g, const ClosureLimits &limits) {
    const Modulus &field = g.modulus();
    if (!field.is_field()) {
        throw UnsupportedModulus("closure_generate requires a field, got " + field.describe());
    }
    const std::uint32_t q = field.size();
    const std::uint32_t n = g.num_vars();
    const std::size_t points = table_size(q, n, limits.max_table);
    const std::size_t premaps = table_size(q, n * n + n, limits.max_premaps);
    const FunctionTable base = g.to_table();

    std::vector<std::vector<Element>> basis;
    auto add_vector = [&](std::vector<Element> v) {
        basis.push_back(std::move(v));
        basis = row_basis(field, std::move(basis));
    };
    add_vector(std::vector<Element>(points, 1));

    std::vector<Element> params(n * n + n, 0);
    std::vector<Element> image(n);
    for (std::size_t m = 0; m < premaps && basis.size() < points; ++m) {
        std::size_t rest = m;
        for (auto &p : params) {
            p = static_cast<Element>(rest % q);
            rest /= q;
        }
        std::vector<Element> composed(points);
        for (std::size_t idx = 0; idx < points; ++idx) {
            auto x = base.point(idx);
            for (std::uint32_t r = 0; r < n; ++r) {
                Element acc = params[n * n + r];
                for (std::uint32_t c = 0; c < n; ++c) {
                    acc = field.add(acc, field.mul(params[r * n + c], x[c]));
                }
                image[r] = acc;
            }
            composed[idx] = base.at(image);
        }
        // Skip vectors already in the span to keep elimination cheap.
        auto candidate = basis;
        candidate.push_back(composed);
        if (rank(field, candidate) > basis.size()) {
            add_vector(std::move(composed));
        }
    }

    const std::size_t span = table_size(q, static_cast<std::uint32_t>(basis.size()), limits.max_span);
    std::vector<MultiPoly> out;
    out.reserve(span);
    std::vector<Element> digits(basis.size());
    for (std::size_t idx = 0; idx < span; ++idx) {
        std::size_t rest = idx;
        for (auto &dgt : digits) {
            dgt = static_cast<Element>(rest % q);
            rest /= q;
        }
        std::vector<Element> values(points, 0);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (digits[k] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < points; ++j) {
                values[j] = field.add(values[j], field.mul(digits[k], basis[k][j]));
            }
        }
        out.push_back(interpolate(FunctionTable{field, n, std::move(values)}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<MultiPoly> is_polynomial_over_ring(const FunctionTable &table) {
    const Modulus &mod = table.modulus;
    if (mod.is_field()) {
        return interpolate(table);
    }
    const std::uint32_t d = mod.size();
    const std::uint32_t n = table.n;
    const std::size_t points = table_size(d, n, 4096);
    if (table.values.size() != points) {
        throw DimensionMismatch("incomplete function table");
    }
    std::vector<std::uint64_t> rhs(table.values.begin(), table.values.end());
    for (std::uint32_t delta = 0; delta <= n * (d - 1); ++delta) {
        auto monos = monomials_up_to(d, n, delta);
        IntMatrix A(points, std::vector<std::uint64_t>(monos.size(), 0));
        for (std::size_t idx = 0; idx < points; ++idx) {
            auto x = table.point(idx);
            for (std::size_t k = 0; k < monos.size(); ++k) {
                Element v = 1;
                for (std::uint32_t i = 0; i < n; ++i) {
                    v = mod.mul(v, mod.pow(x[i], monos[k][i]));
                }
                A[idx][k] = v;
            }
        }
        auto sol = solve_mod(A, rhs, d);
        if (sol) {
            MultiPoly p(mod, n);
            for (std::size_t k = 0; k < monos.size(); ++k) {
                p.add_term(monos[k], static_cast<Element>((*sol)[k] % d));
            }
            return p;
        }
        if (delta == 0 && n == 0) {
            break;
        }
    }
    return std::nullopt;
}

}  // namespace ldmbqc::field
