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

#include <CLI11.hpp>
#include <iostream>

#include "acceptance.h"

int main(int argc, char **argv) {
    CLI::App app{"ldmbqc acceptance suite"};
    ldmbqc::acceptance::Options options;
    options.golden_dir = LDMBQC_GOLDEN_DIR;
    app.add_option("--golden-dir", options.golden_dir, "Directory holding exponential_sums_p5.txt");
    app.add_option("--only", options.only, "Run only these criterion ids")->check(CLI::Range(1, 12));
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    for (const auto &r : ldmbqc::acceptance::run_all(options)) {
        std::cout << ldmbqc::acceptance::format_line(r) << "\n";
        failed += !r.passed;
    }
    std::cout << (failed ? "FAILED" : "ALL PASSED") << ": " << failed << " failing criteria\n";
    return failed ? 1 : 0;
}
