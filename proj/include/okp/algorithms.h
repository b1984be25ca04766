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

// Online strategies for simple instances that use no advice. Each strategy
// is an OnlinePolicy, so it only ever sees the items that have arrived.

#ifndef OKP_ALGORITHMS_H_
#define OKP_ALGORITHMS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "okp/instance.h"
#include "okp/numerics.h"
#include "okp/online.h"

namespace okp {

struct StrategyOutcome {
  RunTrace trace;
  std::string strategy_id;
  // Uniform or threshold draws consumed by the strategy; empty when
  // deterministic.
  std::vector<double> random_draws;
};

// Packs the first item as often as it fits and ignores the rest.
class FirstItemFillPolicy : public OnlinePolicy {
 public:
  std::uint64_t Decide(const Item& item, const KnapsackState& state) override;
};

// Packs every arriving item as often as it still fits.
class GreedyPolicy : public OnlinePolicy {
 public:
  std::uint64_t Decide(const Item& item, const KnapsackState& state) override;
};

// Skips items until one has size <= 1/2 or >= 2/3, then behaves greedily
// from that item on.
class WaitAndFillPolicy : public OnlinePolicy {
 public:
  std::uint64_t Decide(const Item& item, const KnapsackState& state) override;

 private:
  bool triggered_ = false;
};

// Waits for the first item whose solo gain x* = floor(1/x) x reaches the
// threshold, packs it as often as it fits, then continues greedily. Never
// packs anything if no item reaches the threshold.
class ThresholdPolicy : public OnlinePolicy {
 public:
  explicit ThresholdPolicy(double threshold) : threshold_(threshold) {}
  std::uint64_t Decide(const Item& item, const KnapsackState& state) override;

 private:
  double threshold_;
  bool triggered_ = false;
};

RunTrace FirstItemFill(const Instance& instance);
RunTrace GreedyFill(const Instance& instance);
RunTrace WaitAndFill(const Instance& instance);

// Threshold strategy with the draw fixed to `threshold`.
RunTrace ThresholdWithDraw(const Instance& instance, double threshold);

// Draws X from `dist` with a generator seeded by `seed`, then runs the
// threshold strategy.
StrategyOutcome ThresholdRandomized(const Instance& instance,
                                    const ThresholdDistribution& dist,
                                    std::uint64_t seed);

// E[gain] of the threshold strategy: the gain only depends on which item
// triggers, and item i triggers iff X lies in (max_{j<i} x*_j, x*_i].
double ThresholdExpectedGain(const Instance& instance,
                             const ThresholdDistribution& dist);

// Greedy with probability p, wait-and-fill otherwise. p in (0, 1).
Rational MixtureExpectedGain(const Instance& instance, const Rational& p);
StrategyOutcome MixtureSampled(const Instance& instance, const Rational& p,
                               std::uint64_t seed);
// Worst-case guarantees of the two branches and their maximum.
Rational MixtureGreedyBranchBound(const Rational& p);  // 1/(p/2+(1-p)2/3)
Rational MixtureWaitBranchBound(const Rational& p);    // (2/3)/(p/2)
Rational MixtureRatioBound(const Rational& p);

// Acceptance probabilities p_0..p_n of the prefix-family strategy:
// c = 1 + H_{2n} - H_n, p_0 = 1/c, p_k = 1/(c (n+k)). They sum to 1.
std::vector<Rational> PrefixProbabilities(int n);

// Bucket k of a size in [1/2, 1]: [1/2 + k/2n, 1/2 + (k+1)/2n), with 1 in
// bucket n.
int PrefixBucket(const Rational& size, int n);

// Accepts (packs once) the first item that falls into `bucket`; ignores
// everything else. The bucket is drawn once from PrefixProbabilities.
class PrefixBucketPolicy : public OnlinePolicy {
 public:
  PrefixBucketPolicy(int n, int bucket) : n_(n), bucket_(bucket) {}
  // `buckets[i]` is the precomputed bucket of the i-th arriving item.
  PrefixBucketPolicy(int n, int bucket, const std::vector<int>* buckets)
      : n_(n), bucket_(bucket), buckets_(buckets) {}
  std::uint64_t Decide(const Item& item, const KnapsackState& state) override;

 private:
  int n_;
  int bucket_;
  const std::vector<int>* buckets_ = nullptr;
  bool accepted_ = false;
};

// Sum over buckets k of p_k times the size of the first item in bucket k.
Rational PrefixExpectedGain(const Instance& instance, int n);
StrategyOutcome PrefixSampled(const Instance& instance, int n,
                              std::uint64_t seed);
// Inverse-CDF draw of a bucket from the cumulative probabilities.
int DrawPrefixBucket(const std::vector<double>& cumulative, double u);
// Running sums of PrefixProbabilities(n) as doubles.
std::vector<double> PrefixCumulative(int n);

}  // namespace okp

#endif  // OKP_ALGORITHMS_H_
