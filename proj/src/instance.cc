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

#include <fstream>
#include <limits>
#include <sstream>

#include "okp/error.h"

namespace okp {

std::string_view KindName(InstanceKind kind) {
  return kind == InstanceKind::kSimple ? "simple" : "general";
}

Item Item::Create(Rational size, Rational value) {
  if (sgn(size) == 0) {
    if (sgn(value) > 0) {
      Fail(ErrorCode::kInvalidArgument,
           "zero size with positive value makes opt unbounded");
    }
    Fail(ErrorCode::kInvalidArgument, "zero-size items are rejected");
  }
  if (sgn(size) < 0) {
    Fail(ErrorCode::kInvalidArgument,
         "item size " + ToString(size) + " must be positive");
  }
  if (size > 1) {
    Fail(ErrorCode::kInvalidArgument,
         "item size " + ToString(size) + " exceeds the capacity 1");
  }
  if (sgn(value) < 0) {
    Fail(ErrorCode::kInvalidArgument,
         "item value " + ToString(value) + " must be nonnegative");
  }
  Item item;
  item.size_ = std::move(size);
  item.value_ = std::move(value);
  item.max_copies_ = FloorDivU64(Rational(1), item.size_);
  item.solo_gain_ = item.value_ * Rational(BigInt(item.max_copies_));
  item.size_double_ = ToDouble(item.size_);
  item.solo_gain_double_ = ToDouble(item.solo_gain_);
  return item;
}

Instance Instance::Create(std::vector<Item> items, InstanceKind kind) {
  if (kind == InstanceKind::kSimple) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].size() != items[i].value()) {
        Fail(ErrorCode::kInvalidArgument,
             "simple requires value=size (item " + std::to_string(i + 1) +
                 ": size " + ToString(items[i].size()) + ", value " +
                 ToString(items[i].value()) + ")");
      }
    }
  }
  Instance instance;
  instance.items_ = std::move(items);
  instance.kind_ = kind;
  return instance;
}

Instance Instance::Simple(const std::vector<Rational>& sizes) {
  std::vector<Item> items;
  items.reserve(sizes.size());
  for (const Rational& s : sizes) items.push_back(Item::Create(s, s));
  return Create(std::move(items), InstanceKind::kSimple);
}

Instance Instance::Prefix(std::size_t length) const {
  Require(length <= items_.size(), "prefix longer than instance");
  Instance out;
  out.items_.assign(items_.begin(), items_.begin() + length);
  out.kind_ = kind_;
  return out;
}

Instance ValidateInstance(std::span<const std::pair<Rational, Rational>> raw,
                          InstanceKind kind) {
  std::vector<Item> items;
  items.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    try {
      items.push_back(Item::Create(raw[i].first, raw[i].second));
    } catch (const Error& e) {
      throw Error(e.code(),
                  "item " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return Instance::Create(std::move(items), kind);
}

Instance ParseInstanceText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<InstanceKind> kind;
  std::vector<std::pair<Rational, Rational>> raw;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string token; fields >> token;) tokens.push_back(token);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_number) + ": ";
    if (!kind) {
      if (tokens.size() != 1 || (tokens[0] != "simple" && tokens[0] != "general")) {
        Fail(ErrorCode::kParse,
             where + "expected 'simple' or 'general' header");
      }
      kind = tokens[0] == "simple" ? InstanceKind::kSimple
                                   : InstanceKind::kGeneral;
      continue;
    }
    if (tokens.size() > 2 ||
        (tokens.size() == 1 && *kind == InstanceKind::kGeneral)) {
      Fail(ErrorCode::kParse, where + "expected '<size> <value>'");
    }
    try {
      Rational size = ParseRational(tokens[0]);
      Rational value = tokens.size() == 2 ? ParseRational(tokens[1]) : size;
      raw.emplace_back(std::move(size), std::move(value));
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
  }
  if (!kind) Fail(ErrorCode::kParse, "missing 'simple' or 'general' header");
  return ValidateInstance(raw, *kind);
}

Instance LoadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kIo, "cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstanceText(buffer.str());
}

std::string FormatInstanceText(const Instance& instance) {
  std::string out(KindName(instance.kind()));
  out += '\n';
  for (const Item& item : instance.items()) {
    out += ToString(item.size());
    out += ' ';
    out += ToString(item.value());
    out += '\n';
  }
  return out;
}

Rational Packing::TotalSize(const Instance& instance) const {
  Require(counts.size() == instance.size(), "packing/instance length mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) total += instance.item(i).size() * BigInt(counts[i]);
  }
  return total;
}

Rational Packing::TotalValue(const Instance& instance) const {
  Require(counts.size() == instance.size(), "packing/instance length mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] != 0) total += instance.item(i).value() * BigInt(counts[i]);
  }
  return total;
}

bool Packing::IsFeasible(const Instance& instance) const {
  return counts.size() == instance.size() && TotalSize(instance) <= 1;
}

RunTrace MakeTrace(const Instance& instance,
                   std::vector<std::uint64_t> decisions,
                   std::uint64_t bits_read) {
  if (decisions.size() != instance.size()) {
    Fail(ErrorCode::kInternal, "trace has " + std::to_string(decisions.size()) +
                                   " decisions for " +
                                   std::to_string(instance.size()) + " items");
  }
  RunTrace trace;
  trace.gain = 0;
  trace.fill = 0;
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    if (decisions[i] == 0) continue;
    const BigInt count(decisions[i]);
    trace.fill += instance.item(i).size() * count;
    trace.gain += instance.item(i).value() * count;
  }
  if (trace.fill > 1) {
    Fail(ErrorCode::kInternal,
         "trace overfills the knapsack: fill " + ToString(trace.fill));
  }
  trace.decisions = std::move(decisions);
  trace.bits_read = bits_read;
  return trace;
}

Ratio Ratio::Of(const Rational& opt, const Rational& gain) {
  Require(sgn(opt) >= 0 && sgn(gain) >= 0, "ratio of negative quantities");
  if (sgn(gain) == 0) {
    return sgn(opt) == 0 ? Finite(Rational(1)) : Unbounded();
  }
  return Finite(opt / gain);
}

Ratio Ratio::Unbounded() {
  Ratio r;
  r.unbounded_ = true;
  return r;
}

Ratio Ratio::Finite(Rational value) {
  Ratio r;
  r.value_ = std::move(value);
  return r;
}

const Rational& Ratio::value() const {
  Require(!unbounded_, "unbounded ratio has no finite value");
  return value_;
}

double Ratio::ToDouble() const {
  return unbounded_ ? std::numeric_limits<double>::infinity()
                    : okp::ToDouble(value_);
}

std::string Ratio::ToString() const {
  return unbounded_ ? "unbounded" : okp::ToString(value_);
}

bool operator<(const Ratio& a, const Ratio& b) {
  if (a.unbounded_) return false;
  if (b.unbounded_) return true;
  return a.value_ < b.value_;
}

bool operator==(const Ratio& a, const Ratio& b) {
  if (a.unbounded_ || b.unbounded_) return a.unbounded_ == b.unbounded_;
  return a.value_ == b.value_;
}

}  // namespace okp
