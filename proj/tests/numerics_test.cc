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

#include "okp/numerics.h"

#include <gtest/gtest.h>

#include <cmath>

#include "okp/error.h"
#include "okp/harness.h"
#include "okp/rng.h"

namespace okp {
namespace {

const ThresholdDistribution& Dist() {
  return SharedThresholdDistribution(1e-10);
}

TEST(QuadratureTest, IntegratesSmoothFunctions) {
  const QuadratureResult r =
      AdaptiveSimpson([](double x) { return std::exp(x); }, 0, 1, 1e-12);
  EXPECT_NEAR(r.value, std::exp(1.0) - 1, 1e-11);
  const QuadratureResult j = AdaptiveSimpson(
      [](double x) { return (1 + std::log(2 - x)) / x; }, 2.0 / 3, 1, 1e-12);
  EXPECT_NEAR(j.value, 0.47049, 1e-5);
}

TEST(QuadratureTest, FailsOnSingularity) {
  try {
    AdaptiveSimpson([](double x) { return 1 / std::sqrt(std::abs(x - 0.3)); },
                    0, 1, 1e-14, 8);
    FAIL() << "expected a convergence failure";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNumerical);
  }
}

TEST(ThresholdDistributionTest, Constants) {
  const ThresholdDistribution& d = Dist();
  EXPECT_GT(1 / d.p_half(), 1.7351);
  EXPECT_LT(1 / d.p_half(), 1.7353);
  EXPECT_NEAR(d.p_two_thirds(), 0.1224, 1e-4);
  EXPECT_NEAR(d.p_half(), 2 / (3 + d.j_integral()), 1e-15);
  EXPECT_NEAR(d.p_two_thirds(),
              (1 - 2 * std::log(4.0 / 3)) / (3 + d.j_integral()), 1e-15);
  EXPECT_LE(std::abs(d.BalanceResidual()), 1e-9);
  EXPECT_LE(std::abs(d.MassResidual()), 1e-9);
  EXPECT_GT(d.p_half(), 0);
  EXPECT_GT(d.p_two_thirds(), 0);
  EXPECT_LT(d.p_half() + d.p_two_thirds(), 1);
}

TEST(ThresholdDistributionTest, BalanceIdentity) {
  const ThresholdDistribution& d = Dist();
  const double rhs =
      2.0 / 3 * (d.p_two_thirds() + d.p_half() + d.p_half() * std::log(4.0 / 3));
  EXPECT_LE(std::abs(d.p_half() - rhs), 1e-9);
}

TEST(ThresholdDistributionTest, RejectsBadTolerance) {
  EXPECT_THROW(ThresholdDistribution::Compute(0), Error);
  EXPECT_THROW(ThresholdDistribution::Compute(1e-3), Error);
}

TEST(ThresholdDistributionTest, CdfExamples) {
  const ThresholdDistribution& d = Dist();
  EXPECT_EQ(d.Cdf(0.4), 0);
  EXPECT_DOUBLE_EQ(d.Cdf(0.5), d.p_half());
  const double at_two_thirds =
      d.p_half() * (1 + std::log(4.0 / 3)) + d.p_two_thirds();
  EXPECT_NEAR(d.Cdf(2.0 / 3), at_two_thirds, 1e-12);
  EXPECT_NEAR(d.Cdf(2.0 / 3), 0.8644, 1e-4);
  EXPECT_NEAR(d.Cdf(1.0), 1.0, 1e-10);
  EXPECT_THROW(d.Cdf(1.5), Error);
}

TEST(ThresholdDistributionTest, CdfNondecreasingOnFineGrid) {
  const ThresholdDistribution& d = Dist();
  double previous = 0;
  for (int i = 0; i <= 100'000; ++i) {
    const double x = i / 100'000.0;
    const double f = d.Cdf(x);
    EXPECT_GE(f, previous) << x;
    previous = f;
  }
}

TEST(ThresholdDistributionTest, SampleExamples) {
  const ThresholdDistribution& d = Dist();
  EXPECT_EQ(d.Sample(0), 0.5);
  EXPECT_EQ(d.Sample(d.p_half() / 2), 0.5);
  EXPECT_EQ(d.Sample(d.Cdf(2.0 / 3) - d.p_two_thirds() / 2), 2.0 / 3);
}

TEST(ThresholdDistributionTest, SampleInvertsCdf) {
  const ThresholdDistribution& d = Dist();
  for (int i = 1; i < 400; ++i) {
    const double x = 0.5 + i * (0.5 / 400);
    if (std::abs(x - 2.0 / 3) < 1e-6) continue;
    EXPECT_NEAR(d.Sample(d.Cdf(x)), x, 1e-9) << x;
  }
}

TEST(ThresholdDistributionTest, KolmogorovSmirnovAtOnePercent) {
  const ThresholdDistribution& d = Dist();
  const std::size_t n = 100'000;
  std::vector<double> samples;
  for (std::size_t i = 0; i < n; ++i) {
    SplitMix64 rng(DeriveSeed(11, 0, i));
    samples.push_back(d.Sample(UniformDouble(rng)));
  }
  EXPECT_LE(KolmogorovSmirnov(d, samples), KsCriticalValue1Percent(n));
}

TEST(ThresholdDistributionTest, KolmogorovSmirnovDetectsWrongLaw) {
  const ThresholdDistribution& d = Dist();
  std::vector<double> uniform;
  SplitMix64 rng(3);
  for (int i = 0; i < 10'000; ++i) {
    uniform.push_back(0.5 + 0.5 * UniformDouble(rng));
  }
  EXPECT_GT(KolmogorovSmirnov(d, uniform), KsCriticalValue1Percent(10'000));
}

TEST(GMonotoneTest, IncreasingWithKnownEndpoints) {
  const ThresholdDistribution& d = Dist();
  const MonotoneCheck check = CheckGMonotone(d, 10'000);
  EXPECT_TRUE(check.increasing);
  EXPECT_GE(check.min_difference, -1e-12);
  EXPECT_NEAR(check.g_first, 1 / (d.p_half() + d.p_two_thirds()), 1e-12);
  EXPECT_NEAR(check.g_last, 1 / d.p_half(), 1e-8);
  EXPECT_THROW(CheckGMonotone(d, 5), Error);
}

TEST(HarmonicDiffTest, Values) {
  EXPECT_EQ(HarmonicDiff(1), Rational(1, 2));
  EXPECT_EQ(HarmonicDiff(2), Rational(7, 12));
  const double h = ToDouble(HarmonicDiff(10'000));
  EXPECT_NEAR(h, 0.693147, 1e-4);
  EXPECT_GT(1 + h, 1.693);
  Rational direct = 0;
  for (int k = 1; k <= 50; ++k) direct += Rational(1, 50 + k);
  EXPECT_EQ(HarmonicDiff(50), direct);
  EXPECT_THROW(HarmonicDiff(0), Error);
}

}  // namespace
}  // namespace okp
