// Copyright 2026 The UPB Dimer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// End-to-end acceptance checks against reference values, one per
// numbered criterion. Tolerances are fixed here, not configurable.

namespace upb::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 12;

/// Runs the listed criteria (all when `ids` is empty). Progress lines go
/// to `log` when non-null.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {},
                                            std::ostream* log = nullptr);

CriterionResult run_criterion(int id);

/// One "PASS|FAIL  <id>  <name>  <detail>" line per criterion.
void print_table(std::ostream& out, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace upb::acceptance
