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

#include <functional>
#include <map>
#include <optional>

#include "okp/error.h"

namespace okp {
namespace {

constexpr int kSkip = -1;

// Sizes as integer multiples of 1/D and values as multiples of 1/V.
struct ScaledItems {
  BigInt size_scale;
  BigInt value_scale;
  std::vector<std::uint64_t> weights;
  std::vector<std::int64_t> values;
};

BigInt CommonSizeDenominator(const Instance& instance, const Rational& cap) {
  BigInt d = cap.get_den();
  for (const Item& item : instance.items()) d = Lcm(d, item.size().get_den());
  return d;
}

// Returns nullopt when values cannot be scaled into 62-bit integers.
std::optional<ScaledItems> ScaleItems(const Instance& instance,
                                      const BigInt& size_scale,
                                      const BigInt& units) {
  ScaledItems scaled;
  scaled.size_scale = size_scale;
  scaled.value_scale = 1;
  for (const Item& item : instance.items()) {
    scaled.value_scale = Lcm(scaled.value_scale, item.value().get_den());
  }
  // Any DP cell is at most units * max(value per size unit).
  Rational max_density = 0;
  for (const Item& item : instance.items()) {
    Rational density = item.value() / item.size();
    if (density > max_density) max_density = density;
  }
  Rational cell_bound = max_density * scaled.value_scale / size_scale * units;
  if (mpz_sizeinbase(Floor(cell_bound).get_mpz_t(), 2) > 61) {
    return std::nullopt;
  }
  for (const Item& item : instance.items()) {
    Rational w = item.size() * size_scale;
    Rational v = item.value() * scaled.value_scale;
    scaled.weights.push_back(ToU64(w.get_num()));
    scaled.values.push_back(ToI64(v.get_num()));
  }
  return scaled;
}

struct DenseTable {
  std::vector<std::int64_t> best;
  std::vector<int> choice;
};

DenseTable RunDenseDp(const ScaledItems& items, std::uint64_t units,
                      bool want_choice) {
  DenseTable table;
  table.best.assign(units + 1, 0);
  if (want_choice) table.choice.assign(units + 1, kSkip);
  const std::size_t n = items.weights.size();
  for (std::uint64_t c = 1; c <= units; ++c) {
    std::int64_t best = table.best[c - 1];
    int choice = kSkip;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t w = items.weights[i];
      if (w > c) continue;
      const std::int64_t candidate = table.best[c - w] + items.values[i];
      if (candidate > best) {
        best = candidate;
        choice = static_cast<int>(i);
      }
    }
    table.best[c] = best;
    if (want_choice) table.choice[c] = choice;
  }
  return table;
}

// DP over exact fill levels reachable from 0; needs no common denominator.
std::optional<OptResult> SparseOpt(const Instance& instance,
                                   std::size_t max_states) {
  struct Entry {
    Rational value;
    int item = kSkip;  // last item added to reach this level
  };
  std::map<Rational, Entry> levels;
  levels.emplace(Rational(0), Entry{Rational(0), kSkip});
  const std::size_t n = instance.size();
  for (auto it = levels.begin(); it != levels.end(); ++it) {
    const Rational& fill = it->first;
    for (std::size_t i = 0; i < n; ++i) {
      Rational next = fill + instance.item(i).size();
      if (next > 1) continue;
      Rational value = it->second.value + instance.item(i).value();
      auto [pos, inserted] =
          levels.try_emplace(std::move(next), Entry{value, static_cast<int>(i)});
      if (!inserted) {
        Entry& e = pos->second;
        if (value > e.value || (value == e.value && static_cast<int>(i) < e.item)) {
          e.value = std::move(value);
          e.item = static_cast<int>(i);
        }
      }
      if (levels.size() > max_states) return std::nullopt;
    }
  }
  auto best = levels.begin();
  for (auto it = levels.begin(); it != levels.end(); ++it) {
    if (it->second.value > best->second.value) best = it;
  }
  OptResult result;
  result.value = best->second.value;
  result.witness.counts.assign(n, 0);
  Rational fill = best->first;
  while (sgn(fill) != 0) {
    const int i = levels.at(fill).item;
    ++result.witness.counts[i];
    fill -= instance.item(i).size();
  }
  return result;
}

[[noreturn]] void TooFine(const BigInt& d) {
  Fail(ErrorCode::kLimitExceeded,
       "instance too fine for exact DP (common denominator " + d.get_str() +
           ")");
}

}  // namespace

OptResult OptUnbounded(const Instance& instance, const OracleOptions& options) {
  const std::size_t n = instance.size();
  if (n == 0) return OptResult{Rational(0), Packing{}};

  const BigInt d = CommonSizeDenominator(instance, Rational(1));
  std::optional<ScaledItems> scaled;
  if (d <= options.max_denominator) scaled = ScaleItems(instance, d, d);
  if (!scaled) {
    if (options.max_sparse_states == 0) TooFine(d);
    std::optional<OptResult> sparse =
        SparseOpt(instance, options.max_sparse_states);
    if (!sparse) TooFine(d);
    return *std::move(sparse);
  }

  const std::uint64_t units = ToU64(d);
  DenseTable table = RunDenseDp(*scaled, units, /*want_choice=*/true);
  OptResult result;
  result.value = MakeRational(BigInt(table.best[units]), scaled->value_scale);
  result.witness.counts.assign(n, 0);
  for (std::uint64_t c = units; c > 0;) {
    const int i = table.choice[c];
    if (i == kSkip) {
      --c;
    } else {
      ++result.witness.counts[i];
      c -= scaled->weights[i];
    }
  }
  return result;
}

Rational OptBruteForce(const Instance& instance, std::uint64_t node_limit) {
  const std::size_t n = instance.size();
  std::uint64_t nodes = 0;
  Rational best = 0;
  // Depth-first over items; each level tries every feasible multiplicity.
  std::function<void(std::size_t, const Rational&, const Rational&)> visit =
      [&](std::size_t index, const Rational& used, const Rational& value) {
        if (++nodes > node_limit) {
          Fail(ErrorCode::kLimitExceeded,
               "brute-force search space exceeds " +
                   std::to_string(node_limit) + " nodes");
        }
        if (index == n) {
          if (value > best) best = value;
          return;
        }
        const Item& item = instance.item(index);
        Rational u = used;
        Rational v = value;
        while (u <= 1) {
          visit(index + 1, u, v);
          u += item.size();
          v += item.value();
        }
      };
  visit(0, Rational(0), Rational(0));
  return best;
}

CapacityProfile CapacityProfile::Compute(const Instance& instance,
                                         const Rational& max_capacity,
                                         const OracleOptions& options) {
  Require(sgn(max_capacity) >= 0, "negative capacity");
  CapacityProfile profile;
  profile.size_scale_ = CommonSizeDenominator(instance, max_capacity);
  Rational units = max_capacity * profile.size_scale_;
  if (units > options.max_denominator) TooFine(profile.size_scale_);
  profile.max_units_ = ToU64(units.get_num());
  std::optional<ScaledItems> scaled = ScaleItems(
      instance, profile.size_scale_, BigInt(profile.max_units_));
  if (!scaled) TooFine(profile.size_scale_);
  profile.value_scale_ = scaled->value_scale;
  profile.best_ =
      RunDenseDp(*scaled, profile.max_units_, /*want_choice=*/false).best;
  return profile;
}

Rational CapacityProfile::ValueAt(const Rational& capacity) const {
  if (sgn(capacity) < 0) return Rational(0);
  Rational units = capacity * size_scale_;
  BigInt index = Floor(units);
  Require(index <= max_units_, "capacity beyond the profile range");
  return MakeRational(BigInt(best_[ToU64(index)]), value_scale_);
}

}  // namespace okp
