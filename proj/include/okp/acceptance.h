// Copyright 2026 The okp Authors
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

// The acceptance suite: fourteen numbered checks, each exact or at a stated
// tolerance, shared by the `accept` subcommand and the acceptance test.

#ifndef OKP_ACCEPTANCE_H_
#define OKP_ACCEPTANCE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "okp/harness.h"

namespace okp {

inline constexpr int kCriterionCount = 14;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;
  // Criteria to run; empty runs all of them.
  std::vector<int> only;
  // Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

// Runs one criterion (1..kCriterionCount). Exceptions become failures.
CriterionResult RunCriterion(int id, const AcceptanceOptions& options);

std::vector<CriterionResult> RunAcceptance(const AcceptanceOptions& options);

// "PASS  3 name: detail (1.23 s)"
std::string FormatCriterionLine(const CriterionResult& result);

std::string CriterionName(int id);

}  // namespace okp

#endif  // OKP_ACCEPTANCE_H_
