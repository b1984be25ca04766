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

#include "okp/oracle.h"

#include <gtest/gtest.h>

#include <limits>

#include "okp/error.h"
#include "okp/random_instances.h"
#include "okp/rng.h"

namespace okp {
namespace {

Rational R(const char* text) { return ParseRational(text); }

Instance General(const std::vector<std::pair<const char*, const char*>>& items) {
  std::vector<Item> out;
  for (const auto& [size, value] : items) {
    out.push_back(Item::Create(R(size), R(value)));
  }
  return Instance::Create(std::move(out), InstanceKind::kGeneral);
}

TEST(OracleTest, SecondItemOnce) {
  const OptResult result = OptUnbounded(Instance::Simple({R("51/100"), R("1")}));
  EXPECT_EQ(result.value, 1);
  EXPECT_EQ(result.witness.counts, (std::vector<std::uint64_t>{0, 1}));
}

TEST(OracleTest, ThreeCopies) {
  const OptResult result = OptUnbounded(Instance::Simple({R("3/10")}));
  EXPECT_EQ(result.value, R("9/10"));
  EXPECT_EQ(result.witness.counts[0], 3u);
}

TEST(OracleTest, ExactFillWithMultiplicity) {
  const OptResult result =
      OptUnbounded(Instance::Simple({R("99/1000"), R("703/1000")}));
  EXPECT_EQ(result.value, 1);
  EXPECT_EQ(result.witness.counts, (std::vector<std::uint64_t>{3, 1}));
}

TEST(OracleTest, OnlyOneUnitItemFits) {
  const OptResult result = OptUnbounded(General({{"1", "5"}, {"1", "7"}}));
  EXPECT_EQ(result.value, 7);
  EXPECT_EQ(result.witness.counts, (std::vector<std::uint64_t>{0, 1}));
}

TEST(OracleTest, TiesGoToSmallestIndex) {
  const OptResult result = OptUnbounded(Instance::Simple({R("1/2"), R("1/2")}));
  EXPECT_EQ(result.value, 1);
  EXPECT_EQ(result.witness.counts, (std::vector<std::uint64_t>{2, 0}));
}

TEST(OracleTest, EmptyInstance) {
  EXPECT_EQ(OptUnbounded(Instance()).value, 0);
  EXPECT_EQ(OptBruteForce(Instance()), 0);
}

TEST(OracleTest, BruteForceExamples) {
  EXPECT_EQ(OptBruteForce(Instance::Simple({R("3/10")})), R("9/10"));
  EXPECT_EQ(OptBruteForce(General({{"1", "5"}, {"1", "7"}})), 7);
}

TEST(OracleTest, BruteForceNodeLimit) {
  const Instance fine = Instance::Simple(
      {R("1/97"), R("1/89"), R("1/83"), R("1/79"), R("1/73"), R("1/71")});
  try {
    OptBruteForce(fine, 1000);
    FAIL() << "expected the node limit to trip";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLimitExceeded);
  }
}

TEST(OracleTest, SparseFallbackMatchesDense) {
  const Instance instance =
      Instance::Simple({R("1/7"), R("2/11"), R("3/13"), R("5/17")});
  OracleOptions tight;
  tight.max_denominator = 100;  // 7*11*13*17 = 17017 exceeds it
  const OptResult sparse = OptUnbounded(instance, tight);
  const OptResult dense = OptUnbounded(instance);
  EXPECT_EQ(sparse.value, dense.value);
  EXPECT_TRUE(sparse.witness.IsFeasible(instance));
  EXPECT_EQ(sparse.witness.TotalValue(instance), sparse.value);
}

TEST(OracleTest, TooFineWithoutFallback) {
  OracleOptions options;
  options.max_denominator = 100;
  options.max_sparse_states = 0;
  try {
    OptUnbounded(Instance::Simple({R("1/101")}), options);
    FAIL() << "expected a limit error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLimitExceeded);
  }
}

TEST(OracleTest, CapacityProfile) {
  const Instance instance = Instance::Simple({R("1/3"), R("1/4")});
  const CapacityProfile profile =
      CapacityProfile::Compute(instance, Rational(1));
  EXPECT_EQ(profile.ValueAt(R("1")), 1);
  EXPECT_EQ(profile.ValueAt(R("1/2")), R("1/2"));
  EXPECT_EQ(profile.ValueAt(R("2/5")), R("1/3"));
  EXPECT_EQ(profile.ValueAt(R("0")), 0);
}

// Properties on random instances: the DP agrees with enumeration, the
// witness is feasible, simple optima are at most 1, and appending an item
// never lowers opt.
TEST(OracleTest, RandomProperties) {
  SplitMix64 rng(2026);
  RandomInstanceOptions options;
  options.max_items = 6;
  options.max_common_denominator = std::numeric_limits<std::uint64_t>::max();
  for (InstanceKind kind : {InstanceKind::kSimple, InstanceKind::kGeneral}) {
    options.kind = kind;
    for (int i = 0; i < 150; ++i) {
      const Instance instance = RandomInstance(rng, options);
      const OptResult result = OptUnbounded(instance);
      EXPECT_EQ(result.value, OptBruteForce(instance));
      EXPECT_TRUE(result.witness.IsFeasible(instance));
      EXPECT_EQ(result.witness.TotalValue(instance), result.value);
      if (kind == InstanceKind::kSimple) EXPECT_LE(result.value, 1);
      for (std::size_t k = 1; k <= instance.size(); ++k) {
        EXPECT_GE(OptUnbounded(instance.Prefix(k)).value,
                  OptUnbounded(instance.Prefix(k - 1)).value);
      }
    }
  }
}

}  // namespace
}  // namespace okp
