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

#ifndef LDMBQC_MBQC_PLAN_IO_H
#define LDMBQC_MBQC_PLAN_IO_H

#include <string>
#include <string_view>

#include "ldmbqc/mbqc/plan.h"

namespace ldmbqc::mbqc {

/// Canonical plan file text: fields in the order d, n, N, resource, parties, Q, T,
/// q0 (only when nonzero), z, s0; two-space indentation; trailing newline.
std::string serialize_plan(const MbqcPlan &plan);

/// Parses and validates a plan file. Syntax errors and schema violations raise
/// PlanError; `field` holds "line L, column C" or the JSON path of the bad value.
MbqcPlan parse_plan(std::string_view text);

/// Sparse state as {"d", "N", "terms": [{"tau_exp", "ket"}]}.
std::string serialize_state(const state::SparseState &psi);

}  // namespace ldmbqc::mbqc

#endif
