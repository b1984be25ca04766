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

// Exact offline optimum of the unbounded knapsack with capacity 1:
//   opt(I) = max { sum k_i v_i : k_i >= 0 integer, sum k_i s_i <= 1 }.

#ifndef OKP_ORACLE_H_
#define OKP_ORACLE_H_

#include <cstdint>
#include <variant>
#include <vector>

#include "okp/instance.h"

namespace okp {

struct OracleOptions {
  // Largest common size denominator D for the dense DP over 0..D.
  std::uint64_t max_denominator = 1'000'000;
  // When D is too large, the DP runs over reachable exact fill levels only;
  // this caps the number of distinct levels. Zero disables the fallback.
  std::size_t max_sparse_states = 2'000'000;
};

struct OptResult {
  Rational value;
  Packing witness;
};

// Dense unbounded-knapsack DP over scaled capacities. Ties between items go
// to the smallest index, so witnesses are deterministic.
OptResult OptUnbounded(const Instance& instance,
                       const OracleOptions& options = {});

// Exhaustive enumeration of all multiplicity vectors. Independent of the DP;
// used to cross-check it. Fails once more than `node_limit` search nodes are
// visited.
Rational OptBruteForce(const Instance& instance,
                       std::uint64_t node_limit = 100'000'000);

// Best value for every capacity in [0, max_capacity] at once (one DP pass).
class CapacityProfile {
 public:
  static CapacityProfile Compute(const Instance& instance,
                                 const Rational& max_capacity,
                                 const OracleOptions& options = {});

  // Best total value with total size <= capacity.
  Rational ValueAt(const Rational& capacity) const;

 private:
  BigInt size_scale_;   // D
  BigInt value_scale_;  // V
  std::uint64_t max_units_ = 0;
  std::vector<std::int64_t> best_;  // indexed by scaled capacity
};

}  // namespace okp

#endif  // OKP_ORACLE_H_
