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

#include "okp/advice.h"

#include <map>

#include "okp/algorithms.h"
#include "okp/error.h"
#include "okp/online.h"

namespace okp {
namespace {

class OneBitPolicy : public OnlinePolicy {
 public:
  explicit OneBitPolicy(AdviceTape& tape)
      : tape_(tape),
        choice_(tape.ReadBit() ? OneBitChoice::kWait : OneBitChoice::kGreedy) {}

  std::uint64_t Decide(const Item& item, const KnapsackState& state) override {
    return choice_ == OneBitChoice::kGreedy ? greedy_.Decide(item, state)
                                            : wait_.Decide(item, state);
  }
  std::uint64_t BitsRead() const override { return tape_.bits_read(); }

 private:
  AdviceTape& tape_;
  OneBitChoice choice_;
  GreedyPolicy greedy_;
  WaitAndFillPolicy wait_;
};

class EpsAdvicePolicy : public OnlinePolicy {
 public:
  EpsAdvicePolicy(AdviceTape& tape, const Rational& eps)
      : tape_(tape), payload_(DecodeEpsAdvice(tape, eps)) {
    h_prime_ = AdviceDelta(eps) * BigInt(payload_.h_quant);
    for (const auto& [index, count] : payload_.large_list) {
      counts_[index] += count;
    }
  }

  std::uint64_t Decide(const Item& item, const KnapsackState& state) override {
    const std::uint64_t index = state.arrived + 1;
    std::uint64_t count = 0;
    if (payload_.has_small && index == payload_.m) {
      count += FloorDivU64(h_prime_, item.size());
    }
    auto it = counts_.find(index);
    if (it != counts_.end()) count += it->second;
    if (count > state.CopiesThatFit(item)) {
      Fail(ErrorCode::kInvalidArgument,
           "advice asks for more copies of item " + std::to_string(index) +
               " than fit");
    }
    return count;
  }
  std::uint64_t BitsRead() const override { return tape_.bits_read(); }

  std::uint64_t n() const { return payload_.n; }

 private:
  AdviceTape& tape_;
  EpsAdvicePayload payload_;
  Rational h_prime_;
  std::map<std::uint64_t, std::uint64_t> counts_;
};

void RequirePositiveEps(const Rational& eps) {
  if (sgn(eps) <= 0) {
    Fail(ErrorCode::kInvalidArgument, "eps must be positive, got " +
                                          ToString(eps));
  }
}

}  // namespace

OneBitChoice OneBitDecision(const Instance& instance) {
  const Rational greedy = GreedyFill(instance).gain;
  const Rational wait = WaitAndFill(instance).gain;
  return wait > greedy ? OneBitChoice::kWait : OneBitChoice::kGreedy;
}

AdviceTape OneBitOracle(const Instance& instance) {
  AdviceTape tape;
  tape.AppendBit(OneBitDecision(instance) == OneBitChoice::kWait);
  return tape;
}

RunTrace OneBitAlgorithm(const Instance& instance, AdviceTape tape) {
  Require(instance.is_simple(), "one-bit algorithm requires a simple instance");
  if (tape.size() == 0) {
    Fail(ErrorCode::kInvalidArgument, "one-bit algorithm needs a nonempty tape");
  }
  OneBitPolicy policy(tape);
  return RunOnline(instance, policy);
}

Rational AdviceDelta(const Rational& eps) {
  RequirePositiveEps(eps);
  Rational delta = eps / (eps + 2);
  return delta;
}

EpsAdviceLayout EpsAdviceLayout::Of(std::uint64_t n, const Rational& eps) {
  Require(n < (std::uint64_t{1} << 62), "instance length out of range");
  EpsAdviceLayout layout;
  layout.n = n;
  layout.delta = AdviceDelta(eps);
  layout.inverse_delta = ToU64(Floor(Inverse(layout.delta)));
  layout.header_bits = EliasGammaLength(n + 1);
  layout.index_bits = CeilLog2(n + 1);
  layout.h_quant_bits = CeilLog2(layout.inverse_delta + 2);
  layout.count_bits = CeilLog2(layout.inverse_delta + 1);
  layout.multiplicity_bits = CeilLog2(layout.inverse_delta + 1);
  return layout;
}

EpsAdvicePayload BuildEpsAdvicePayload(const Instance& instance,
                                       const Rational& eps,
                                       const OracleOptions& options) {
  const EpsAdviceLayout layout = EpsAdviceLayout::Of(instance.size(), eps);
  const OptResult opt = OptUnbounded(instance, options);
  EpsAdvicePayload payload;
  payload.n = instance.size();
  Rational h = 0;
  Rational best_density = -1;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Item& item = instance.item(i);
    const std::uint64_t count = opt.witness.counts[i];
    if (count == 0) continue;
    if (item.size() <= layout.delta) {
      h += item.size() * BigInt(count);
      // Densest small item of the packing; ties keep the smallest index.
      Rational density = item.value() / item.size();
      if (density > best_density) {
        best_density = std::move(density);
        payload.m = i + 1;
      }
    } else {
      payload.large_list.emplace_back(i + 1, count);
    }
  }
  payload.has_small = sgn(h) > 0;
  if (payload.has_small) {
    payload.h_quant = ToU64(Floor(h / layout.delta));
  }
  return payload;
}

AdviceTape EncodeEpsAdvice(const EpsAdvicePayload& payload,
                           const Rational& eps) {
  const EpsAdviceLayout layout = EpsAdviceLayout::Of(payload.n, eps);
  Require(payload.large_list.size() <= layout.inverse_delta,
          "too many large items for the advice layout");
  AdviceTape tape;
  tape.AppendEliasGamma(payload.n + 1);
  tape.AppendBit(payload.has_small);
  if (payload.has_small) {
    tape.AppendUnsigned(payload.m, layout.index_bits);
    tape.AppendUnsigned(payload.h_quant, layout.h_quant_bits);
  }
  tape.AppendUnsigned(payload.large_list.size(), layout.count_bits);
  for (const auto& [index, count] : payload.large_list) {
    tape.AppendUnsigned(index, layout.index_bits);
    tape.AppendUnsigned(count, layout.multiplicity_bits);
  }
  return tape;
}

EpsAdvicePayload DecodeEpsAdvice(AdviceTape& tape, const Rational& eps) {
  EpsAdvicePayload payload;
  payload.n = tape.ReadEliasGamma() - 1;
  const EpsAdviceLayout layout = EpsAdviceLayout::Of(payload.n, eps);
  auto read_index = [&]() {
    const std::uint64_t index = tape.ReadUnsigned(layout.index_bits);
    if (index == 0 || index > payload.n) {
      Fail(ErrorCode::kInvalidArgument,
           "advice index " + std::to_string(index) + " outside 1.." +
               std::to_string(payload.n));
    }
    return index;
  };
  payload.has_small = tape.ReadBit();
  if (payload.has_small) {
    payload.m = read_index();
    payload.h_quant = tape.ReadUnsigned(layout.h_quant_bits);
  }
  const std::uint64_t count = tape.ReadUnsigned(layout.count_bits);
  if (count > layout.inverse_delta) {
    Fail(ErrorCode::kInvalidArgument, "malformed advice: list too long");
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t index = read_index();
    const std::uint64_t multiplicity =
        tape.ReadUnsigned(layout.multiplicity_bits);
    payload.large_list.emplace_back(index, multiplicity);
  }
  return payload;
}

AdviceTape EpsAdviceOracle(const Instance& instance, const Rational& eps,
                           const OracleOptions& options) {
  return EncodeEpsAdvice(BuildEpsAdvicePayload(instance, eps, options), eps);
}

RunTrace EpsAdviceAlgorithm(const Instance& instance, const Rational& eps,
                            AdviceTape tape) {
  EpsAdvicePolicy policy(tape, eps);
  if (policy.n() != instance.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "advice describes " + std::to_string(policy.n()) +
             " items but the instance has " + std::to_string(instance.size()));
  }
  return RunOnline(instance, policy);
}

std::uint64_t AdviceBitBound(std::uint64_t n, const Rational& eps) {
  const EpsAdviceLayout layout = EpsAdviceLayout::Of(n, eps);
  return layout.header_bits + 1 + layout.index_bits + layout.h_quant_bits +
         layout.count_bits +
         layout.inverse_delta *
             (layout.index_bits + layout.multiplicity_bits);
}

}  // namespace okp
