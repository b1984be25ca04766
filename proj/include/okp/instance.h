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

// Domain model of the online unbounded knapsack with capacity 1: items,
// instances, packings, run traces and competitive ratios. All quantities are
// exact rationals.

#ifndef OKP_INSTANCE_H_
#define OKP_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "okp/rational.h"

namespace okp {

enum class InstanceKind { kSimple, kGeneral };

std::string_view KindName(InstanceKind kind);

// An item of the unbounded knapsack. Construct through Item::Create, which
// enforces 0 < size <= 1 and value >= 0 and caches derived quantities.
class Item {
 public:
  static Item Create(Rational size, Rational value);

  const Rational& size() const { return size_; }
  const Rational& value() const { return value_; }

  // floor(1 / size): copies that fit into an empty knapsack.
  std::uint64_t max_copies() const { return max_copies_; }
  // Value obtained by packing this item alone as often as it fits
  // (x* = floor(1/x) * x for simple items).
  const Rational& solo_gain() const { return solo_gain_; }
  double size_double() const { return size_double_; }
  double solo_gain_double() const { return solo_gain_double_; }

  friend bool operator==(const Item& a, const Item& b) {
    return a.size_ == b.size_ && a.value_ == b.value_;
  }

 private:
  Item() = default;

  Rational size_;
  Rational value_;
  std::uint64_t max_copies_ = 0;
  Rational solo_gain_;
  double size_double_ = 0;
  double solo_gain_double_ = 0;
};

// Items in arrival order, indexed 0..n-1 internally (1..n in text output).
class Instance {
 public:
  Instance() = default;

  // Validates every item; a simple instance requires value == size.
  static Instance Create(std::vector<Item> items, InstanceKind kind);
  static Instance Simple(const std::vector<Rational>& sizes);

  const std::vector<Item>& items() const { return items_; }
  const Item& item(std::size_t i) const { return items_[i]; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  InstanceKind kind() const { return kind_; }
  bool is_simple() const { return kind_ == InstanceKind::kSimple; }

  Instance Prefix(std::size_t length) const;

 private:
  std::vector<Item> items_;
  InstanceKind kind_ = InstanceKind::kSimple;
};

// Checks the raw (size, value) pairs and returns the canonical instance.
// Throws okp::Error naming the violated invariant.
Instance ValidateInstance(std::span<const std::pair<Rational, Rational>> raw,
                          InstanceKind kind);

// Text format: first line "simple" or "general", then one "<size> <value>"
// per line ("p/q" or exact decimals). A simple item may omit its value.
// Blank lines and '#' comments are ignored.
Instance ParseInstanceText(std::string_view text);
Instance LoadInstanceFile(const std::string& path);
std::string FormatInstanceText(const Instance& instance);

// Multiplicity per item index (dense, one entry per item).
struct Packing {
  std::vector<std::uint64_t> counts;

  Rational TotalSize(const Instance& instance) const;
  Rational TotalValue(const Instance& instance) const;
  bool IsFeasible(const Instance& instance) const;
};

// Per-item decisions of one online run.
struct RunTrace {
  std::vector<std::uint64_t> decisions;
  Rational gain;
  Rational fill;
  std::uint64_t bits_read = 0;
};

// Builds a trace from decisions and verifies fill <= 1 and one decision per
// item. Every algorithm's trace passes through here.
RunTrace MakeTrace(const Instance& instance,
                   std::vector<std::uint64_t> decisions,
                   std::uint64_t bits_read = 0);

// opt / gain, or unbounded when gain = 0 < opt. 0 / 0 counts as ratio 1.
class Ratio {
 public:
  static Ratio Of(const Rational& opt, const Rational& gain);
  static Ratio Unbounded();
  static Ratio Finite(Rational value);

  bool unbounded() const { return unbounded_; }
  // Requires !unbounded().
  const Rational& value() const;
  double ToDouble() const;
  std::string ToString() const;

  friend bool operator<(const Ratio& a, const Ratio& b);
  friend bool operator==(const Ratio& a, const Ratio& b);
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

 private:
  bool unbounded_ = false;
  Rational value_ = 1;
};

}  // namespace okp

#endif  // OKP_INSTANCE_H_
