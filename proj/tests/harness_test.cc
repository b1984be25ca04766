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

#include "okp/harness.h"

#include <gtest/gtest.h>

#include <cmath>

#include "json.hpp"
#include "okp/error.h"
#include "okp/random_instances.h"
#include "okp/report.h"
#include "okp/rng.h"

namespace okp {
namespace {

Rational R(const char* text) { return ParseRational(text); }

ChainFamily Family(std::string_view spec) {
  return ChainFamily::Generate(ParseFamilySpec(spec));
}

ExperimentConfig Config(AlgorithmId id, std::uint64_t trials = 20'000) {
  ExperimentConfig config;
  config.algorithm = id;
  config.trials = trials;
  return config;
}

void ExpectValidRatios(const RatioReport& report) {
  for (const InstanceRecord& r : report.records) {
    EXPECT_TRUE(r.ratio >= 1 - 1e-12 || std::isinf(r.ratio)) << r.id;
    if (r.exact_ratio && !r.exact_ratio->unbounded()) {
      EXPECT_GE(r.exact_ratio->value(), 1) << r.id;
    }
  }
}

TEST(AlgorithmRegistryTest, NamesRoundTrip) {
  for (std::string_view name : AlgorithmNames()) {
    EXPECT_EQ(AlgorithmName(ParseAlgorithm(name)), name);
  }
  EXPECT_TRUE(IsRandomized(AlgorithmId::kThresholdRandomized));
  EXPECT_FALSE(IsRandomized(AlgorithmId::kEpsAdvice));
  EXPECT_THROW(ParseAlgorithm("nope"), Error);
}

TEST(EvaluateDeterministicTest, FirstItemFillOnDet2) {
  const RatioReport report = EvaluateFamily(
      Config(AlgorithmId::kFirstItemFill), Family("det2:eps=1/100"));
  ASSERT_TRUE(report.worst_exact_ratio);
  EXPECT_EQ(*report.worst_exact_ratio, Ratio::Finite(R("100/51")));
  EXPECT_EQ(report.worst_id, "I_2");
  ExpectValidRatios(report);
}

TEST(EvaluateDeterministicTest, OneBitOnAdviceLowerBound) {
  const RatioReport report = EvaluateFamily(Config(AlgorithmId::kOneBit),
                                            Family("advice_lb:n=6,eps=1/100"));
  EXPECT_LE(*report.worst_exact_ratio, Ratio::Finite(R("3/2")));
  for (const InstanceRecord& r : report.records) {
    EXPECT_EQ(r.bits_read, 1u);
    EXPECT_FALSE(r.tape_hex.empty());
  }
}

TEST(EvaluateDeterministicTest, EpsAdviceOnRandomGeneralInstances) {
  SplitMix64 rng(5);
  std::vector<Instance> instances;
  std::vector<std::string> ids;
  std::vector<Rational> opts;
  for (int i = 0; i < 200; ++i) {
    instances.push_back(
        RandomInstanceTwoDenominators(rng, InstanceKind::kGeneral, 1, 40, 50));
    ids.push_back("r" + std::to_string(i));
    opts.push_back(OptUnbounded(instances.back()).value);
  }
  ExperimentConfig config = Config(AlgorithmId::kEpsAdvice);
  config.eps = R("1/5");
  const RatioReport report =
      EvaluateDeterministic(config, instances, ids, opts);
  EXPECT_LE(*report.worst_exact_ratio, Ratio::Finite(R("5/4")));
  ExpectValidRatios(report);
}

TEST(EvaluateRandomizedTest, MixtureOnDet2) {
  ExperimentConfig config = Config(AlgorithmId::kMixture);
  config.p = R("3/4");
  const RatioReport report = EvaluateFamily(config, Family("det2:eps=1/1000000"));
  EXPECT_LE(report.worst_ratio, 24.0 / 13 + 1e-3);
  for (const InstanceRecord& r : report.records) {
    ASSERT_TRUE(r.gain && r.monte_carlo && r.z_score);
    EXPECT_LE(std::abs(*r.z_score), 3) << r.id;
  }
  ExpectValidRatios(report);
}

TEST(EvaluateRandomizedTest, PrefixStrategyEqualizes) {
  const RatioReport report =
      EvaluateFamily(Config(AlgorithmId::kPrefixFamily, 1000),
                     Family("prefix:n=100,eps=1/1000000"));
  double lo = 1e9, hi = 0;
  for (const InstanceRecord& r : report.records) {
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  EXPECT_LE(hi - lo, 1e-5);
}

TEST(EvaluateRandomizedTest, ThresholdMonteCarloAgreesWithExact) {
  const RatioReport report =
      EvaluateFamily(Config(AlgorithmId::kThresholdRandomized, 200'000),
                     Family("prefix:n=100,eps=1/1000000"));
  int within = 0;
  for (const InstanceRecord& r : report.records) {
    if (std::abs(*r.z_score) <= 3) ++within;
  }
  EXPECT_GE(within * 100, static_cast<int>(report.records.size()) * 99);
  EXPECT_LE(report.worst_ratio, 1.7354);
}

TEST(EvaluateRandomizedTest, SameSeedSameReport) {
  ExperimentConfig config = Config(AlgorithmId::kThresholdRandomized, 30'000);
  const ChainFamily family = Family("three:eps=1/100");
  config.threads = 1;
  const std::string a =
      FormatRatioReport(EvaluateFamily(config, family), ReportFormat::kJson);
  config.threads = 3;
  const std::string b =
      FormatRatioReport(EvaluateFamily(config, family), ReportFormat::kJson);
  EXPECT_EQ(a, b);
  config.seed += 1;
  const std::string c =
      FormatRatioReport(EvaluateFamily(config, family), ReportFormat::kJson);
  EXPECT_NE(a, c);
}

TEST(EvaluateRandomizedTest, IndependentStreamsPerInstance) {
  const Instance instance = Instance::Simple({R("6/10"), R("1/5")});
  ExperimentConfig config = Config(AlgorithmId::kMixture, 10'000);
  const RatioReport report = EvaluateInstance(config, instance, "x");
  ASSERT_EQ(report.records.size(), 1u);
  EXPECT_TRUE(report.records[0].monte_carlo);
  EXPECT_EQ(report.records[0].monte_carlo->trials, 10'000u);
}

TEST(EvaluateRandomizedTest, RatiosAtLeastOne) {
  const ChainFamily family = Family("three:eps=1/100");
  for (AlgorithmId id : {AlgorithmId::kThresholdRandomized,
                         AlgorithmId::kMixture}) {
    ExpectValidRatios(EvaluateFamily(Config(id, 5000), family));
  }
}

TEST(EvaluateRandomizedTest, RejectsBadConfigs) {
  EXPECT_THROW(EvaluateInstance(Config(AlgorithmId::kMixture, 0),
                                Instance::Simple({R("1/2")}), "x"),
               Error);
  EXPECT_THROW(EvaluateRandomized(Config(AlgorithmId::kGreedyFill), {}, {}, {},
                                  false),
               Error);
}

TEST(ReportTest, Formats) {
  const RatioReport report = EvaluateFamily(
      Config(AlgorithmId::kFirstItemFill), Family("det2:eps=1/100"));
  const nlohmann::json json =
      nlohmann::json::parse(FormatRatioReport(report, ReportFormat::kJson));
  EXPECT_EQ(json["algorithm"], "first_item_fill");
  EXPECT_EQ(json["worst_ratio_exact"], "100/51");
  EXPECT_EQ(json["records"].size(), 2u);
  const std::string csv = FormatRatioReport(report, ReportFormat::kCsv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  const std::string text = FormatRatioReport(report, ReportFormat::kText);
  EXPECT_NE(text.find("worst_ratio_exact"), std::string::npos);
  EXPECT_THROW(ParseReportFormat("xml"), Error);
}

TEST(ReportTest, UnboundedRatioIsFlagged) {
  const RatioReport report =
      EvaluateFamily(Config(AlgorithmId::kWaitAndFill),
                     Family("det2:eps=1/100"));
  const nlohmann::json json =
      nlohmann::json::parse(FormatRatioReport(report, ReportFormat::kJson));
  EXPECT_EQ(json["worst_ratio"], "unbounded");
  EXPECT_EQ(json["records"][0]["ratio_exact"], "unbounded");
}

}  // namespace
}  // namespace okp
