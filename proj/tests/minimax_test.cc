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

#include "okp/minimax.h"

#include <gtest/gtest.h>

#include "okp/error.h"
#include "okp/numerics.h"

namespace okp {
namespace {

Rational R(const char* text) { return ParseRational(text); }

ChainFamily Family(std::string_view spec) {
  return ChainFamily::Generate(ParseFamilySpec(spec));
}

TEST(DetMinimaxTest, Det2) {
  const DetMinimaxResult result = DetMinimax(Family("det2:eps=1/100"));
  EXPECT_EQ(result.ratio, Ratio::Finite(R("100/51")));
}

TEST(DetMinimaxTest, Det2SweepApproachesTwo) {
  Ratio previous = Ratio::Finite(1);
  for (const char* spec : {"det2:eps=1/10", "det2:eps=1/100", "det2:eps=1/1000"}) {
    const Ratio r = DetMinimax(Family(spec)).ratio;
    EXPECT_GT(r, previous);
    EXPECT_LT(r, Ratio::Finite(2));
    previous = r;
  }
}

TEST(DetMinimaxTest, GeneralValues) {
  EXPECT_EQ(DetMinimax(Family("general_values:k=5")).ratio,
            Ratio::Finite(16));
  EXPECT_EQ(DetMinimax(Family("general_values:k=1")).ratio, Ratio::Finite(1));
}

TEST(DetMinimaxTest, WitnessReplayReproducesRatios) {
  for (const char* spec : {"det2:eps=1/100", "three:eps=1/100",
                           "prefix:n=4,eps=1/1000", "advice_lb:n=5,eps=1/100",
                           "exact_lb:m=4", "general_values:k=4"}) {
    const ChainFamily family = Family(spec);
    const DetMinimaxResult result = DetMinimax(family);
    Ratio worst = Ratio::Finite(1);
    for (std::size_t i = 0; i < family.instance_count(); ++i) {
      const RunTrace trace = ReplayWitness(family, result.witness, i);
      const Ratio r = Ratio::Of(result.opts[i], trace.gain);
      EXPECT_EQ(r, result.instance_ratios[i]) << spec << " " << i;
      if (r > worst) worst = r;
    }
    EXPECT_EQ(worst, result.ratio) << spec;
  }
}

TEST(DetMinimaxTest, StateLimit) {
  MinimaxOptions options;
  options.max_states = 2;
  try {
    DetMinimax(Family("prefix:n=20,eps=1/1000"), options);
    FAIL() << "expected the state limit to trip";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLimitExceeded);
  }
}

TEST(AdviceMinimaxTest, AdviceLowerBoundFamily) {
  const ChainFamily family = Family("advice_lb:n=5,eps=1/100");
  const AdviceMinimaxResult one = DetMinimaxWithAdvice(family, 1);
  EXPECT_GE(one.ratio, Ratio::Finite(R("150/103")));
  EXPECT_LE(one.strategies.size(), 2u);
  const AdviceMinimaxResult two = DetMinimaxWithAdvice(family, 2);
  EXPECT_EQ(two.ratio, Ratio::Finite(1));
  // Zero bits is the plain deterministic minimax.
  EXPECT_EQ(DetMinimaxWithAdvice(family, 0).ratio, DetMinimax(family).ratio);
}

TEST(AdviceMinimaxTest, AssignmentAchievesRatio) {
  const ChainFamily family = Family("advice_lb:n=5,eps=1/100");
  const AdviceMinimaxResult result = DetMinimaxWithAdvice(family, 1);
  Ratio worst = Ratio::Finite(1);
  for (std::size_t i = 0; i < family.instance_count(); ++i) {
    const Ratio& r = result.strategies[result.assignment[i]][i];
    EXPECT_EQ(r, result.instance_ratios[i]);
    if (r > worst) worst = r;
  }
  EXPECT_EQ(worst, result.ratio);
}

TEST(AdviceMinimaxTest, OneBitSolvesDet2) {
  EXPECT_EQ(DetMinimaxWithAdvice(Family("det2:eps=1/100"), 1).ratio,
            Ratio::Finite(1));
}

TEST(RandMinimaxChainTest, LimitConstants) {
  EXPECT_EQ(RandMinimaxChain(Family("det2:limit")).ratio, R("3/2"));
  EXPECT_EQ(RandMinimaxChain(Family("three:limit")).ratio, R("19/12"));
  for (int n : {1, 3, 10, 40}) {
    const RandomizedChainResult r =
        RandMinimaxChain(Family("prefix:n=" + std::to_string(n) + ",limit"));
    EXPECT_EQ(r.ratio, 1 + HarmonicDiff(n)) << n;
  }
}

TEST(RandMinimaxChainTest, EqualizedProbabilities) {
  const RandomizedChainResult r =
      RandMinimaxChain(Family("prefix:n=12,eps=1/1000"));
  Rational total = 0;
  for (const Rational& p : r.probabilities) {
    EXPECT_GE(p, 0);
    total += p;
  }
  EXPECT_EQ(total, 1);
  for (const Ratio& ratio : r.instance_ratios) {
    EXPECT_EQ(ratio, Ratio::Finite(r.ratio));
  }
}

TEST(RandMinimaxChainTest, Preconditions) {
  EXPECT_THROW(RandMinimaxChain(Family("advice_lb:n=4,eps=1/100")), Error);
  EXPECT_THROW(RandMinimaxChain(Family("general_values:k=3")), Error);
  const ChainFamily half = ChainFamily::FromInstances(
      {Instance::Simple({R("1/2")})}, {"a"});
  EXPECT_THROW(RandMinimaxChain(half), Error);
}

TEST(RandMinimaxChainTest, NeverWorseThanDeterministic) {
  for (const char* spec : {"det2:eps=1/10", "three:eps=1/10",
                           "prefix:n=3,eps=1/100", "prefix:n=6,eps=1/1000"}) {
    const ChainFamily family = Family(spec);
    EXPECT_LE(Ratio::Finite(RandMinimaxChain(family).ratio),
              DetMinimax(family).ratio)
        << spec;
  }
}

TEST(RandMinimaxChainTest, ProbabilityShiftDirections) {
  const RandomizedChainResult chain =
      RandMinimaxChain(Family("prefix:n=10,limit"));
  const ShiftCheck check = CheckProbabilityShift(chain, R("1/1000"));
  EXPECT_TRUE(check.passed);
  EXPECT_EQ(check.checked, 2 * 10 * 11);
  for (const std::string& f : check.failures) ADD_FAILURE() << f;
}

TEST(RandMinimaxChainTest, OneRandomBit) {
  const Rational eps = R("1/1000");
  const RandomizedChainResult chain =
      RandMinimaxChain(Family("det2:eps=1/1000"));
  for (const char* p : {"0", "1/2", "1"}) {
    EXPECT_GE(TwoInstanceBitRatio(chain, R(p)),
              Ratio::Finite(2 / (1 + 2 * eps)))
        << p;
  }
}

TEST(DistinctDecisionsTest, ExactLowerBound) {
  const std::pair<int, int> cases[] = {{4, 3}, {16, 5}};
  for (const auto& [m, bits] : cases) {
    const DistinctDecisions d =
        DistinctFirstDecisions(Family("exact_lb:m=" + std::to_string(m)));
    EXPECT_EQ(d.distinct, m + 1);
    EXPECT_EQ(d.advice_bits_lower_bound, bits);
    for (int k = 0; k <= m; ++k) EXPECT_EQ(d.required[k], k);
  }
}

TEST(DistinctDecisionsTest, OptimalMultiplicitiesPerInstance) {
  const int m = 4;
  const DistinctDecisions d =
      DistinctFirstDecisions(Family("exact_lb:m=" + std::to_string(m)));
  ASSERT_EQ(d.optimal.size(), static_cast<std::size_t>(m + 1));
  for (int k = 0; k < m; ++k) EXPECT_EQ(d.optimal[k], std::vector<int>{k});
  // The last second item is 1/m^2, so m^2 copies of it also fill the knapsack.
  EXPECT_EQ(d.optimal[m], (std::vector<int>{0, m}));
}

TEST(ThresholdExpectedRatiosTest, BelowInversePHalf) {
  const ThresholdDistribution dist = ThresholdDistribution::Compute(1e-10);
  for (const char* spec : {"det2:eps=1/1000000", "prefix:n=50,eps=1/1000000"}) {
    for (double r : ThresholdExpectedRatios(dist, Family(spec))) {
      EXPECT_LE(r, 1 / dist.p_half() + 1e-4) << spec;
      EXPECT_GE(r, 1);
    }
  }
  EXPECT_THROW(ThresholdExpectedRatios(dist, Family("exact_lb:m=4")), Error);
}

}  // namespace
}  // namespace okp
