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

#ifndef OKP_ONLINE_H_
#define OKP_ONLINE_H_

#include <cstdint>
#include <functional>

#include "okp/instance.h"

namespace okp {

// What an online algorithm may observe besides the current item: its own
// knapsack and the number of items seen so far. The instance length is never
// exposed.
struct KnapsackState {
  Rational fill = 0;
  Rational gain = 0;
  std::size_t arrived = 0;  // items before the current one
  // Double shadow of `fill`; only used to reject items that clearly do not
  // fit without touching the exact arithmetic.
  double fill_estimate = 0;

  Rational Remaining() const { return 1 - fill; }
  // floor(remaining / size): copies of `item` that still fit.
  std::uint64_t CopiesThatFit(const Item& item) const;
};

class OnlinePolicy {
 public:
  virtual ~OnlinePolicy() = default;

  // Called once per arriving item, in order. Returns how many copies to pack.
  virtual std::uint64_t Decide(const Item& item,
                               const KnapsackState& state) = 0;

  virtual std::uint64_t BitsRead() const { return 0; }
};

// Feeds the items one at a time and rejects infeasible decisions.
RunTrace RunOnline(const Instance& instance, OnlinePolicy& policy);

// Streaming variant used by Monte Carlo loops: no trace is built; `after_item`
// sees the index and the running gain (as a double) after each decision.
// Returns the final exact gain.
Rational RunOnlineStreaming(
    const Instance& instance, OnlinePolicy& policy,
    const std::function<void(std::size_t index, double gain)>& after_item);

}  // namespace okp

#endif  // OKP_ONLINE_H_
