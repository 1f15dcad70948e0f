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


#include "ldmbqc/rational.h"

#include <stdexcept>

namespace ldmbqc {

std::string to_string(const Rational &r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    auto digits_only = [](std::string_view s, bool allow_sign) {
        if (s.empty()) {
            return false;
        }
        std::size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };
    const std::string bad = "not a rational number: '" + std::string(text) + "'";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!digits_only(num, true) || !digits_only(den, false)) {
            throw std::invalid_argument(bad);
        }
        BigInt d{std::string(den)};
        if (d == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        return Rational(BigInt(std::string(num)), d);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (negative || (!whole.empty() && whole[0] == '+')) {
            whole.remove_prefix(1);
        }
        if ((!whole.empty() && !digits_only(whole, false)) || !digits_only(frac, false)) {
            throw std::invalid_argument(bad);
        }
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        BigInt num = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
        num = num * scale + BigInt(std::string(frac));
        Rational r(num, scale);
        return negative ? Rational(-r) : r;
    }
    if (!digits_only(text, true)) {
        throw std::invalid_argument(bad);
    }
    return Rational(BigInt(std::string(text)));
}

double to_double(const Rational &r) {
    return r.convert_to<double>();
}

}  // namespace ldmbqc
