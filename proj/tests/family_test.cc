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

#include "okp/family.h"

#include <gtest/gtest.h>

#include "okp/error.h"
#include "okp/minimax.h"
#include "okp/oracle.h"

namespace okp {
namespace {

Rational R(const char* text) { return ParseRational(text); }

ChainFamily Family(std::string_view spec) {
  return ChainFamily::Generate(ParseFamilySpec(spec));
}

TEST(FamilySpecTest, ParseAndFormat) {
  const FamilyParams p = ParseFamilySpec("prefix:n=10,eps=1/1000");
  EXPECT_EQ(p.kind, FamilyKind::kPrefix);
  EXPECT_EQ(p.n, 10);
  EXPECT_EQ(p.eps, R("1/1000"));
  EXPECT_EQ(FormatFamilySpec(p), "prefix:n=10,eps=1/1000");
  EXPECT_TRUE(ParseFamilySpec("det2:limit").limit);
  EXPECT_THROW(ParseFamilySpec("nope:n=1"), Error);
  EXPECT_THROW(ParseFamilySpec("prefix:n=abc"), Error);
  EXPECT_THROW(ParseFamilySpec("prefix:q=1"), Error);
}

TEST(FamilyTest, PrefixSizesAreCanonical) {
  const std::vector<Item> items =
      Family("prefix:n=4,eps=1/1000").MasterSequence();
  EXPECT_EQ(items[2].size(), R("3/4"));
  EXPECT_EQ(items[2].size().get_den(), 4);
}

TEST(FamilyTest, Det2) {
  const ChainFamily f = Family("det2:eps=1/100");
  ASSERT_EQ(f.instance_count(), 2u);
  EXPECT_TRUE(f.IsChain());
  EXPECT_EQ(f.InstanceAt(f.terminals()[0]).item(0).size(), R("51/100"));
  EXPECT_EQ(f.InstanceAt(f.terminals()[1]).item(1).size(), 1);
  EXPECT_THROW(Family("det2:eps=1/2"), Error);
}

TEST(FamilyTest, Three) {
  const ChainFamily f = Family("three:eps=1/100");
  ASSERT_EQ(f.instance_count(), 3u);
  const std::vector<Item> items = f.MasterSequence();
  EXPECT_EQ(items[1].size(), R("3/4"));
  EXPECT_EQ(items[2].size(), 1);
}

// The second item of prefix(1) is 1/2 + 1/2 = 1.
TEST(FamilyTest, PrefixOneHasTwoInstances) {
  const ChainFamily f = Family("prefix:n=1,eps=1/1000000");
  ASSERT_EQ(f.instance_count(), 2u);
  const std::vector<Rational> opts = FamilyOpts(f);
  EXPECT_EQ(opts[0], R("1/2") + R("1/1000000"));
  EXPECT_EQ(opts[1], 1);
  EXPECT_EQ(f.Label(0), "I_0");
}

TEST(FamilyTest, PrefixEpsBound) {
  EXPECT_THROW(Family("prefix:n=10,eps=1/20"), Error);
  EXPECT_NO_THROW(Family("prefix:n=10,eps=1/21"));
}

TEST(FamilyTest, AdviceLowerBoundOptsAreOne) {
  const ChainFamily f = Family("advice_lb:n=6,eps=1/100");
  EXPECT_EQ(f.instance_count(), 5u);
  EXPECT_FALSE(f.IsChain());
  for (const Rational& opt : FamilyOpts(f)) EXPECT_EQ(opt, 1);
  const Instance i3 = f.InstanceAt(f.terminals()[1]);
  ASSERT_EQ(i3.size(), 3u);
  EXPECT_EQ(i3.item(1).size(), R("1/3") + R("1/10000"));
  EXPECT_EQ(i3.item(2).size(), R("2/3") - R("1/10000"));
}

TEST(FamilyTest, ExactLowerBoundFillsExactly) {
  const ChainFamily f = Family("exact_lb:m=10");
  ASSERT_EQ(f.instance_count(), 11u);
  const Instance i3 = f.InstanceAt(f.terminals()[3]);
  EXPECT_EQ(i3.item(0).size(), R("99/1000"));
  EXPECT_EQ(i3.item(1).size(), R("703/1000"));
  EXPECT_EQ(3 * i3.item(0).size() + i3.item(1).size(), 1);
  EXPECT_EQ(OptUnbounded(i3).witness.counts,
            (std::vector<std::uint64_t>{3, 1}));
  EXPECT_THROW(Family("exact_lb:m=1"), Error);
}

TEST(FamilyTest, GeneralValues) {
  const ChainFamily f = Family("general_values:k=4");
  EXPECT_FALSE(f.is_simple_family());
  const std::vector<Item> items = f.MasterSequence();
  ASSERT_EQ(items.size(), 4u);
  EXPECT_EQ(items[3].value(), 8);
  EXPECT_EQ(items[3].size(), 1);
}

TEST(FamilyTest, LimitModeHasZeroEps) {
  const ChainFamily f = Family("det2:limit");
  EXPECT_EQ(f.MasterSequence()[0].size(), R("1/2"));
  EXPECT_THROW(Family("det2:limit,eps=1/10"), Error);
}

TEST(FamilyTest, FromInstancesMergesPrefixes) {
  const ChainFamily det2 = Family("det2:eps=1/100");
  std::vector<Instance> instances = det2.Instances();
  instances.push_back(Instance::Simple({R("6/10")}));
  const ChainFamily f =
      ChainFamily::FromInstances(instances, {"a", "b", "c"});
  EXPECT_EQ(f.instance_count(), 3u);
  EXPECT_EQ(f.node_count(), 4u);  // root, 1/2+eps, 1, 6/10
  EXPECT_FALSE(f.IsChain());
  EXPECT_EQ(f.Label(2), "c");
}

TEST(FamilyTest, EmitIsParseable) {
  const ChainFamily f = Family("three:eps=1/100");
  const std::string text = FormatFamilyText(f);
  EXPECT_NE(text.find("# I_1"), std::string::npos);
  const std::size_t last = text.rfind("simple");
  const Instance parsed = ParseInstanceText(text.substr(last));
  EXPECT_EQ(parsed.size(), 3u);
}

}  // namespace
}  // namespace okp
