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

// Seeded random instance generators for property tests.

#ifndef OKP_RANDOM_INSTANCES_H_
#define OKP_RANDOM_INSTANCES_H_

#include <cstdint>

#include "okp/instance.h"
#include "okp/rng.h"

namespace okp {

struct RandomInstanceOptions {
  InstanceKind kind = InstanceKind::kSimple;
  int min_items = 0;
  int max_items = 6;
  // Every size and value denominator is drawn from 1..max_denominator.
  int max_denominator = 20;
  // Sizes are at least 1/min_size_inverse (0 disables the bound).
  int min_size_inverse = 0;
  // Largest admissible lcm of the size denominators; instances above it are
  // redrawn.
  std::uint64_t max_common_denominator = 1'000'000;
  // General values are drawn from [0, max_value_ratio * size].
  int max_value_ratio = 3;
};

// Each item picks its own denominators independently.
Instance RandomInstance(SplitMix64& rng, const RandomInstanceOptions& options);

// All sizes share one denominator q drawn from 2..max_denominator, which
// keeps the oracle DP at most q cells wide.
Instance RandomInstanceSharedDenominator(SplitMix64& rng, InstanceKind kind,
                                         int min_items, int max_items,
                                         int max_denominator);

// Sizes and values use two denominators drawn from 2..max_denominator, with
// a bias towards small items.
Instance RandomInstanceTwoDenominators(SplitMix64& rng, InstanceKind kind,
                                       int min_items, int max_items,
                                       int max_denominator);

// Uniform integer in [lo, hi].
std::int64_t UniformInt(SplitMix64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace okp

#endif  // OKP_RANDOM_INSTANCES_H_
