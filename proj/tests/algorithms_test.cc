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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "okp/error.h"
#include "okp/harness.h"
#include "okp/numerics.h"
#include "okp/oracle.h"
#include "okp/random_instances.h"
#include "okp/rng.h"

namespace okp {
namespace {

Rational R(const char* text) { return ParseRational(text); }

Instance S(std::initializer_list<const char*> sizes) {
  std::vector<Rational> out;
  for (const char* s : sizes) out.push_back(R(s));
  return Instance::Simple(out);
}

using Decisions = std::vector<std::uint64_t>;

TEST(FirstItemFillTest, Examples) {
  RunTrace t = FirstItemFill(S({"3/10"}));
  EXPECT_EQ(t.decisions, Decisions{3});
  EXPECT_EQ(t.gain, R("9/10"));
  t = FirstItemFill(S({"51/100", "1"}));
  EXPECT_EQ(t.decisions, (Decisions{1, 0}));
  EXPECT_EQ(t.gain, R("51/100"));
  t = FirstItemFill(S({"1/2", "1/2"}));
  EXPECT_EQ(t.decisions, (Decisions{2, 0}));
  EXPECT_EQ(t.gain, 1);
  EXPECT_EQ(FirstItemFill(Instance()).gain, 0);
}

TEST(GreedyFillTest, Examples) {
  RunTrace t = GreedyFill(S({"55/100", "7/10"}));
  EXPECT_EQ(t.decisions, (Decisions{1, 0}));
  EXPECT_EQ(t.gain, R("55/100"));
  t = GreedyFill(S({"51/100", "52/100"}));
  EXPECT_EQ(t.decisions, (Decisions{1, 0}));
  t = GreedyFill(S({"1/4", "1/3"}));
  EXPECT_EQ(t.decisions, (Decisions{4, 0}));
  EXPECT_EQ(t.gain, 1);
}

TEST(WaitAndFillTest, Examples) {
  RunTrace t = WaitAndFill(S({"55/100", "7/10"}));
  EXPECT_EQ(t.decisions, (Decisions{0, 1}));
  EXPECT_EQ(t.gain, R("7/10"));
  t = WaitAndFill(S({"34/100"}));
  EXPECT_EQ(t.decisions, Decisions{2});
  EXPECT_EQ(t.gain, R("68/100"));
  t = WaitAndFill(S({"6/10"}));
  EXPECT_EQ(t.decisions, Decisions{0});
  EXPECT_EQ(t.gain, 0);
}

TEST(AlgorithmsTest, RejectGeneralInstances) {
  const Instance general = Instance::Create(
      {Item::Create(R("1/2"), R("3"))}, InstanceKind::kGeneral);
  EXPECT_THROW(FirstItemFill(general), Error);
  EXPECT_THROW(GreedyFill(general), Error);
  EXPECT_THROW(WaitAndFill(general), Error);
}

// Invariants of the deterministic strategies on random simple instances.
TEST(AlgorithmsTest, RandomInvariants) {
  SplitMix64 rng(99);
  for (int i = 0; i < 3000; ++i) {
    const Instance instance =
        RandomInstanceSharedDenominator(rng, InstanceKind::kSimple, 1, 8, 60);
    const Rational opt = OptUnbounded(instance).value;
    const RunTrace first = FirstItemFill(instance);
    const RunTrace greedy = GreedyFill(instance);
    const RunTrace wait = WaitAndFill(instance);
    EXPECT_GE(first.gain * 2, 1);
    for (const RunTrace* t : {&first, &greedy, &wait}) {
      EXPECT_LE(t->fill, 1);
      EXPECT_EQ(t->gain, t->fill);
      EXPECT_LE(t->gain, opt);
    }
    // Greedy leaves less room than any item that arrived while it fit.
    Rational remaining = 1;
    for (std::size_t k = 0; k < instance.size(); ++k) {
      const Rational& s = instance.item(k).size();
      if (s <= remaining) {
        remaining -= s * Rational(BigInt(greedy.decisions[k]));
        EXPECT_LT(remaining, s);
      }
    }
    bool has_trigger = false;
    for (const Item& item : instance.items()) {
      if (item.size() * 2 <= 1 || item.size() * 3 >= 2) has_trigger = true;
    }
    if (has_trigger) EXPECT_GE(wait.gain * 3, 2);
    const Rational best = std::max(greedy.gain, wait.gain);
    EXPECT_GE(best * 3, opt * 2);
  }
}

TEST(ThresholdTest, FixedDraws) {
  RunTrace t = ThresholdWithDraw(S({"51/100", "1"}), 0.5);
  EXPECT_EQ(t.decisions, (Decisions{1, 0}));
  EXPECT_EQ(t.gain, R("51/100"));
  t = ThresholdWithDraw(S({"51/100", "1"}), 0.95);
  EXPECT_EQ(t.decisions, (Decisions{0, 1}));
  EXPECT_EQ(t.gain, 1);
  // The tie x* = X triggers.
  t = ThresholdWithDraw(S({"1/2"}), 1.0);
  EXPECT_EQ(t.decisions, Decisions{2});
}

TEST(ThresholdTest, NeverTriggeredPacksNothing) {
  const RunTrace t = ThresholdWithDraw(S({"51/100", "52/100"}), 0.9);
  EXPECT_EQ(t.gain, 0);
}

TEST(ThresholdTest, ContinuesGreedilyAfterTrigger) {
  const RunTrace t = ThresholdWithDraw(S({"7/10", "1/5"}), 0.6);
  EXPECT_EQ(t.decisions, (Decisions{1, 1}));
  EXPECT_EQ(t.gain, R("9/10"));
}

TEST(ThresholdTest, ExpectedRatioOnTwoItems) {
  const ThresholdDistribution& dist = SharedThresholdDistribution(1e-10);
  const Instance instance = S({"45/100", "9/10"});
  const double expected = ThresholdExpectedGain(instance, dist);
  const double ratio = 0.9 / expected;
  EXPECT_NEAR(ratio, 1.0 / dist.Cdf(0.9), 1e-12);
  EXPECT_NEAR(ratio, 1.0329, 1e-4);
}

TEST(ThresholdTest, SingleUnitItemRatioOne) {
  const ThresholdDistribution& dist = SharedThresholdDistribution(1e-10);
  EXPECT_NEAR(ThresholdExpectedGain(S({"1"}), dist), 1.0, 1e-12);
}

TEST(ThresholdTest, SameSeedSameOutcome) {
  const ThresholdDistribution& dist = SharedThresholdDistribution(1e-10);
  const Instance instance = S({"51/100", "3/4", "1"});
  const StrategyOutcome a = ThresholdRandomized(instance, dist, 42);
  const StrategyOutcome b = ThresholdRandomized(instance, dist, 42);
  EXPECT_EQ(a.trace.decisions, b.trace.decisions);
  ASSERT_EQ(a.random_draws.size(), 1u);
  EXPECT_EQ(a.random_draws, b.random_draws);
}

TEST(MixtureTest, ExpectedGainExample) {
  const Rational gain = MixtureExpectedGain(S({"6/10"}), R("3/4"));
  EXPECT_EQ(gain, R("45/100"));
  EXPECT_EQ(R("6/10") / gain, R("4/3"));
}

TEST(MixtureTest, BranchBounds) {
  EXPECT_EQ(MixtureRatioBound(R("3/4")), R("24/13"));
  EXPECT_EQ(MixtureRatioBound(R("8/11")), R("11/6"));
  EXPECT_EQ(MixtureGreedyBranchBound(R("8/11")),
            MixtureWaitBranchBound(R("8/11")));
  EXPECT_THROW(MixtureExpectedGain(S({"1/2"}), R("0")), Error);
  EXPECT_THROW(MixtureExpectedGain(S({"1/2"}), R("1")), Error);
}

TEST(MixtureTest, SampledMeanMatchesExact) {
  const Instance instance = S({"55/100", "7/10", "1/5"});
  const Rational p = R("3/4");
  const int draws = 100'000;
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < draws; ++i) {
    const StrategyOutcome o = MixtureSampled(instance, p, DeriveSeed(5, 0, i));
    const double g = ToDouble(o.trace.gain);
    sum += g;
    sum_sq += g * g;
  }
  const double mean = sum / draws;
  const double se = std::sqrt((sum_sq / draws - mean * mean) / (draws - 1));
  const double exact = ToDouble(MixtureExpectedGain(instance, p));
  EXPECT_LE(std::abs(mean - exact), 3 * se + 1e-12);
}

TEST(PrefixStrategyTest, ProbabilitiesSumToOne) {
  for (int n : {1, 2, 7, 100}) {
    Rational total = 0;
    for (const Rational& p : PrefixProbabilities(n)) total += p;
    EXPECT_EQ(total, 1) << n;
  }
  const std::vector<Rational> p1 = PrefixProbabilities(1);
  EXPECT_EQ(p1[0], R("2/3"));
}

TEST(PrefixStrategyTest, FirstInstanceExpectation) {
  const Rational eps = R("1/1000000");
  const Instance i0 = Instance::Simple({Rational(R("1/2") + eps)});
  EXPECT_EQ(PrefixExpectedGain(i0, 1), R("2/3") * (R("1/2") + eps));
}

TEST(PrefixStrategyTest, BucketsAreHalfOpen) {
  EXPECT_EQ(PrefixBucket(R("1/2"), 4), 0);
  EXPECT_EQ(PrefixBucket(R("5/8"), 4), 1);
  EXPECT_EQ(PrefixBucket(R("5/8") - R("1/1000"), 4), 0);
  EXPECT_EQ(PrefixBucket(R("1"), 4), 4);
  EXPECT_THROW(PrefixBucket(R("49/100"), 4), Error);
}

TEST(PrefixStrategyTest, SampledPacksAtMostOnce) {
  const Instance instance = S({"1/2", "3/4", "1"});
  for (int i = 0; i < 200; ++i) {
    const StrategyOutcome o = PrefixSampled(instance, 2, DeriveSeed(3, 0, i));
    std::uint64_t packed = 0;
    for (std::uint64_t d : o.trace.decisions) packed += d;
    EXPECT_LE(packed, 1u);
  }
}

}  // namespace
}  // namespace okp
