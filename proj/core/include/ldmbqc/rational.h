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


#ifndef LDMBQC_RATIONAL_H
#define LDMBQC_RATIONAL_H

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace ldmbqc {

/// Exact probabilities and bounds.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational &r);

/// Parses "num/den", "num" or a finite decimal such as "0.9".
Rational parse_rational(std::string_view text);

double to_double(const Rational &r);

}  // namespace ldmbqc

#endif
