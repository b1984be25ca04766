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

#include "okp/algorithms.h"

#include <algorithm>

#include "okp/error.h"
#include "okp/rng.h"

namespace okp {
namespace {

void RequireSimple(const Instance& instance, const char* strategy) {
  if (!instance.is_simple()) {
    Fail(ErrorCode::kInvalidArgument,
         std::string(strategy) + " requires a simple instance");
  }
}

void RequireProbability(const Rational& p) {
  if (!(sgn(p) > 0 && p < 1)) {
    Fail(ErrorCode::kInvalidArgument,
         "mixture probability must lie in (0, 1), got " + ToString(p));
  }
}

bool IsWaitTrigger(const Item& item) {
  return item.size() * 2 <= 1 || item.size() * 3 >= 2;
}

}  // namespace

std::uint64_t FirstItemFillPolicy::Decide(const Item& item,
                                          const KnapsackState& state) {
  return state.arrived == 0 ? item.max_copies() : 0;
}

std::uint64_t GreedyPolicy::Decide(const Item& item,
                                   const KnapsackState& state) {
  return state.CopiesThatFit(item);
}

std::uint64_t WaitAndFillPolicy::Decide(const Item& item,
                                        const KnapsackState& state) {
  if (!triggered_ && IsWaitTrigger(item)) triggered_ = true;
  return triggered_ ? state.CopiesThatFit(item) : 0;
}

std::uint64_t ThresholdPolicy::Decide(const Item& item,
                                      const KnapsackState& state) {
  if (!triggered_ && item.solo_gain_double() >= threshold_) triggered_ = true;
  return triggered_ ? state.CopiesThatFit(item) : 0;
}

RunTrace FirstItemFill(const Instance& instance) {
  RequireSimple(instance, "first_item_fill");
  FirstItemFillPolicy policy;
  return RunOnline(instance, policy);
}

RunTrace GreedyFill(const Instance& instance) {
  RequireSimple(instance, "greedy_fill");
  GreedyPolicy policy;
  return RunOnline(instance, policy);
}

RunTrace WaitAndFill(const Instance& instance) {
  RequireSimple(instance, "wait_and_fill");
  WaitAndFillPolicy policy;
  return RunOnline(instance, policy);
}

RunTrace ThresholdWithDraw(const Instance& instance, double threshold) {
  RequireSimple(instance, "threshold_randomized");
  ThresholdPolicy policy(threshold);
  return RunOnline(instance, policy);
}

StrategyOutcome ThresholdRandomized(const Instance& instance,
                                    const ThresholdDistribution& dist,
                                    std::uint64_t seed) {
  SplitMix64 rng(seed);
  const double x = dist.Sample(UniformDouble(rng));
  return StrategyOutcome{ThresholdWithDraw(instance, x), "threshold_randomized",
                         {x}};
}

double ThresholdExpectedGain(const Instance& instance,
                             const ThresholdDistribution& dist) {
  RequireSimple(instance, "threshold_randomized");
  double expected = 0;
  double prefix_max = 0;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const double x_star = instance.item(i).solo_gain_double();
    if (x_star <= prefix_max) continue;
    const double probability = dist.Cdf(x_star) - dist.Cdf(prefix_max);
    prefix_max = x_star;
    if (probability <= 0) continue;
    expected += probability * ToDouble(ThresholdWithDraw(instance, x_star).gain);
  }
  return expected;
}

Rational MixtureExpectedGain(const Instance& instance, const Rational& p) {
  RequireProbability(p);
  Rational expected =
      p * GreedyFill(instance).gain + (1 - p) * WaitAndFill(instance).gain;
  return expected;
}

StrategyOutcome MixtureSampled(const Instance& instance, const Rational& p,
                               std::uint64_t seed) {
  RequireProbability(p);
  SplitMix64 rng(seed);
  const double u = UniformDouble(rng);
  if (u < ToDouble(p)) {
    return StrategyOutcome{GreedyFill(instance), "mixture/greedy_fill", {u}};
  }
  return StrategyOutcome{WaitAndFill(instance), "mixture/wait_and_fill", {u}};
}

Rational MixtureGreedyBranchBound(const Rational& p) {
  RequireProbability(p);
  Rational denominator = p / 2 + (1 - p) * Rational(2, 3);
  return Inverse(denominator);
}

Rational MixtureWaitBranchBound(const Rational& p) {
  RequireProbability(p);
  Rational bound = Rational(2, 3) / (p / 2);
  return bound;
}

Rational MixtureRatioBound(const Rational& p) {
  Rational a = MixtureGreedyBranchBound(p);
  Rational b = MixtureWaitBranchBound(p);
  return a > b ? a : b;
}

std::vector<Rational> PrefixProbabilities(int n) {
  Require(n >= 1, "prefix strategy needs n >= 1");
  Rational c = 1 + HarmonicDiff(n);
  std::vector<Rational> p;
  p.reserve(n + 1);
  p.push_back(Inverse(c));
  for (int k = 1; k <= n; ++k) {
    Rational pk = Inverse(c * (n + k));
    p.push_back(std::move(pk));
  }
  return p;
}

int PrefixBucket(const Rational& size, int n) {
  if (size * 2 < 1 || size > 1) {
    Fail(ErrorCode::kInvalidArgument,
         "prefix strategy needs items in [1/2, 1], got " + ToString(size));
  }
  Rational scaled = (size - Rational(1, 2)) * (2 * n);
  const BigInt k = Floor(scaled);
  return static_cast<int>(std::min<long>(k.get_si(), n));
}

std::uint64_t PrefixBucketPolicy::Decide(const Item& item,
                                         const KnapsackState& state) {
  if (accepted_) return 0;
  const int bucket = buckets_ != nullptr ? (*buckets_)[state.arrived]
                                         : PrefixBucket(item.size(), n_);
  if (bucket != bucket_) return 0;
  accepted_ = true;
  return state.CopiesThatFit(item) > 0 ? 1 : 0;
}

Rational PrefixExpectedGain(const Instance& instance, int n) {
  RequireSimple(instance, "prefix_family_strategy");
  const std::vector<Rational> p = PrefixProbabilities(n);
  std::vector<bool> seen(n + 1, false);
  Rational expected = 0;
  for (const Item& item : instance.items()) {
    const int k = PrefixBucket(item.size(), n);
    if (seen[k]) continue;
    seen[k] = true;
    expected += p[k] * item.size();
  }
  return expected;
}

int DrawPrefixBucket(const std::vector<double>& cumulative, double u) {
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) --it;
  return static_cast<int>(it - cumulative.begin());
}

std::vector<double> PrefixCumulative(int n) {
  std::vector<double> cumulative;
  Rational running = 0;
  for (const Rational& pk : PrefixProbabilities(n)) {
    running += pk;
    cumulative.push_back(ToDouble(running));
  }
  return cumulative;
}

StrategyOutcome PrefixSampled(const Instance& instance, int n,
                              std::uint64_t seed) {
  RequireSimple(instance, "prefix_family_strategy");
  const std::vector<double> cumulative = PrefixCumulative(n);
  SplitMix64 rng(seed);
  const double u = UniformDouble(rng);
  PrefixBucketPolicy policy(n, DrawPrefixBucket(cumulative, u));
  return StrategyOutcome{RunOnline(instance, policy), "prefix_family_strategy",
                         {u}};
}

}  // namespace okp
