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

#include "okp/online.h"

#include "okp/error.h"

namespace okp {
namespace {

void Pack(const Item& item, std::uint64_t count, KnapsackState& state) {
  if (count == 0) return;
  if (count > state.CopiesThatFit(item)) {
    Fail(ErrorCode::kInternal,
         "policy packed " + std::to_string(count) + " copies of " +
             ToString(item.size()) + " with remaining capacity " +
             ToString(state.Remaining()));
  }
  const BigInt copies(count);
  state.fill += item.size() * copies;
  state.fill_estimate = ToDouble(state.fill);
  state.gain += item.value() * copies;
}

}  // namespace

std::uint64_t KnapsackState::CopiesThatFit(const Item& item) const {
  if (item.size_double() > 1.0 - fill_estimate + 1e-9) return 0;
  if (cmp(item.size(), 1 - fill) > 0) return 0;
  if (sgn(fill) == 0) return item.max_copies();
  return FloorDivU64(Remaining(), item.size());
}

RunTrace RunOnline(const Instance& instance, OnlinePolicy& policy) {
  KnapsackState state;
  std::vector<std::uint64_t> decisions;
  decisions.reserve(instance.size());
  for (const Item& item : instance.items()) {
    const std::uint64_t count = policy.Decide(item, state);
    Pack(item, count, state);
    decisions.push_back(count);
    ++state.arrived;
  }
  RunTrace trace = MakeTrace(instance, std::move(decisions), policy.BitsRead());
  if (trace.gain != state.gain) {
    Fail(ErrorCode::kInternal, "gain bookkeeping mismatch");
  }
  return trace;
}

Rational RunOnlineStreaming(
    const Instance& instance, OnlinePolicy& policy,
    const std::function<void(std::size_t index, double gain)>& after_item) {
  KnapsackState state;
  double gain = 0;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Item& item = instance.item(i);
    const std::uint64_t count = policy.Decide(item, state);
    if (count != 0) {
      Pack(item, count, state);
      gain = ToDouble(state.gain);
    }
    ++state.arrived;
    if (after_item) after_item(i, gain);
  }
  return state.gain;
}

}  // namespace okp
