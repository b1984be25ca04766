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

#include "okp/instance.h"

#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "okp/error.h"

namespace okp {
namespace {

Rational R(const char* text) { return ParseRational(text); }

using Raw = std::vector<std::pair<Rational, Rational>>;

std::string ValidationMessage(const Raw& raw, InstanceKind kind) {
  try {
    ValidateInstance(raw, kind);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(InstanceTest, ValidSimpleInstance) {
  const Raw raw{{R("1/2"), R("1/2")}};
  const Instance instance = ValidateInstance(raw, InstanceKind::kSimple);
  EXPECT_EQ(instance.size(), 1u);
  EXPECT_TRUE(instance.is_simple());
}

TEST(InstanceTest, ZeroSizeIsRejected) {
  const std::string message =
      ValidationMessage({{R("0"), R("5")}}, InstanceKind::kGeneral);
  EXPECT_NE(message.find("zero size"), std::string::npos) << message;
}

TEST(InstanceTest, SimpleRequiresValueEqualsSize) {
  const std::string message =
      ValidationMessage({{R("3/10"), R("2/10")}}, InstanceKind::kSimple);
  EXPECT_NE(message.find("value=size"), std::string::npos) << message;
}

TEST(InstanceTest, RejectsOversizedAndNegative) {
  EXPECT_FALSE(ValidationMessage({{R("11/10"), R("1")}}, InstanceKind::kGeneral)
                   .empty());
  EXPECT_FALSE(ValidationMessage({{R("-1/2"), R("1")}}, InstanceKind::kGeneral)
                   .empty());
  EXPECT_FALSE(ValidationMessage({{R("1/2"), R("-1")}}, InstanceKind::kGeneral)
                   .empty());
}

TEST(InstanceTest, ItemCachesSoloGain) {
  const Item item = Item::Create(R("3/10"), R("3/10"));
  EXPECT_EQ(item.max_copies(), 3u);
  EXPECT_EQ(item.solo_gain(), R("9/10"));
  EXPECT_DOUBLE_EQ(item.solo_gain_double(), 0.9);
}

TEST(InstanceTest, ParsesTextFormat) {
  const Instance simple =
      ParseInstanceText("simple\n# comment\n51/100 51/100\n\n1\n");
  ASSERT_EQ(simple.size(), 2u);
  EXPECT_EQ(simple.item(0).size(), R("51/100"));
  EXPECT_EQ(simple.item(1).value(), R("1"));
  const Instance general = ParseInstanceText("general\n0.5 3\n1 7\n");
  ASSERT_EQ(general.size(), 2u);
  EXPECT_EQ(general.item(0).value(), R("3"));
  EXPECT_FALSE(general.is_simple());
}

TEST(InstanceTest, TextRoundTrip) {
  const Instance original = ParseInstanceText("general\n1/3 2\n3/4 0\n");
  const Instance again = ParseInstanceText(FormatInstanceText(original));
  ASSERT_EQ(again.size(), original.size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    EXPECT_EQ(again.item(i), original.item(i));
  }
  EXPECT_EQ(again.kind(), original.kind());
}

TEST(InstanceTest, RejectsBadText) {
  EXPECT_THROW(ParseInstanceText(""), Error);
  EXPECT_THROW(ParseInstanceText("weird\n1/2 1/2\n"), Error);
  EXPECT_THROW(ParseInstanceText("simple\n1/2 1/3\n"), Error);
  EXPECT_THROW(ParseInstanceText("general\n1/2\n"), Error);
  EXPECT_THROW(ParseInstanceText("general\n1/2 1 2\n"), Error);
}

TEST(InstanceTest, LoadMissingFileIsIoError) {
  try {
    LoadInstanceFile("/nonexistent/instance.txt");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(InstanceTest, TraceChecksCapacity) {
  const Instance instance = Instance::Simple({R("1/2"), R("1/2")});
  const RunTrace ok = MakeTrace(instance, {1, 1}, 0);
  EXPECT_EQ(ok.fill, 1);
  EXPECT_EQ(ok.gain, ok.fill);
  EXPECT_THROW(MakeTrace(instance, {2, 1}, 0), Error);
  EXPECT_THROW(MakeTrace(instance, {1}, 0), Error);
}

TEST(InstanceTest, PackingFeasibility) {
  const Instance instance = Instance::Simple({R("3/10")});
  Packing packing{{3}};
  EXPECT_TRUE(packing.IsFeasible(instance));
  EXPECT_EQ(packing.TotalValue(instance), R("9/10"));
  packing.counts[0] = 4;
  EXPECT_FALSE(packing.IsFeasible(instance));
}

TEST(InstanceTest, RatioSemantics) {
  EXPECT_EQ(Ratio::Of(R("1"), R("51/100")).value(), R("100/51"));
  EXPECT_TRUE(Ratio::Of(R("1"), R("0")).unbounded());
  EXPECT_EQ(Ratio::Of(R("0"), R("0")), Ratio::Finite(1));
  EXPECT_LT(Ratio::Finite(2), Ratio::Unbounded());
  EXPECT_EQ(Ratio::Unbounded().ToString(), "unbounded");
}

TEST(InstanceTest, PrefixKeepsKind) {
  const Instance instance = Instance::Simple({R("1/2"), R("3/4"), R("1")});
  const Instance prefix = instance.Prefix(2);
  EXPECT_EQ(prefix.size(), 2u);
  EXPECT_TRUE(prefix.is_simple());
}

}  // namespace
}  // namespace okp
