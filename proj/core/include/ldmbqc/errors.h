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

#ifndef LDMBQC_ERRORS_H
#define LDMBQC_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldmbqc {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation that needs a field was handed a composite ring (or vice versa).
struct UnsupportedModulus : Error {
    using Error::Error;
};

/// An enumeration would exceed its configured size limit.
struct GuardExceeded : Error {
    using Error::Error;
};

/// An eigenvalue or phase is not a power of omega where one is required.
struct PhaseDomainError : Error {
    using Error::Error;
};

/// Sizes of matrices, states or tables do not agree.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// The temporal dependency graph of a plan contains a cycle.
struct CycleError : Error {
    using Error::Error;
};

/// The plan's output depends on measurement randomness for some input.
struct NotDeterministic : Error {
    using Error::Error;
};

/// The dense cross-check disagrees with itself beyond the alarm tolerance.
struct InconsistencyAlarm : Error {
    using Error::Error;
};

/// A degree witness cannot be formed because the output table is not a polynomial.
struct UnsupportedWitness : Error {
    using Error::Error;
};

/// A plan (or plan file) violates its structural invariants.
struct PlanError : Error {
    PlanError(std::string field_path, const std::string &message)
        : Error(field_path.empty() ? message : field_path + ": " + message), field(std::move(field_path)) {
    }
    std::string field;
};

/// A compiled plan does not reproduce its target table.
struct VerificationFailed : Error {
    VerificationFailed(std::vector<std::uint32_t> input_, std::uint32_t expected_, std::uint32_t actual_);
    std::vector<std::uint32_t> input;
    std::uint32_t expected;
    std::uint32_t actual;
};

}  // namespace ldmbqc

#endif
