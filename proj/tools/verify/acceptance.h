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

#ifndef LDMBQC_TOOLS_VERIFY_ACCEPTANCE_H
#define LDMBQC_TOOLS_VERIFY_ACCEPTANCE_H

#include <string>
#include <vector>

namespace ldmbqc::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;
};

struct Options {
    std::string golden_dir;  // holds exponential_sums_p5.txt
    std::vector<int> only;   // empty: all criteria
};

inline constexpr int kNumCriteria = 12;

/// Runs the acceptance criteria in order. A criterion that throws is reported as failed.
std::vector<CriterionResult> run_all(const Options &options);

/// "PASS 01 name (0.012 s, budget 1 s): detail"
std::string format_line(const CriterionResult &r);

}  // namespace ldmbqc::acceptance

#endif
