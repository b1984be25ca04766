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

#include "okp/random_instances.h"

#include <random>

#include "okp/error.h"

namespace okp {
namespace {

Item RandomItem(SplitMix64& rng, InstanceKind kind, std::int64_t size_den,
                std::int64_t value_den, std::int64_t min_num,
                int max_value_ratio) {
  Rational size = MakeRational(UniformInt(rng, min_num, size_den), size_den);
  if (kind == InstanceKind::kSimple) return Item::Create(size, size);
  // Values up to max_value_ratio times the size, on their own grid.
  Rational top = size * max_value_ratio * value_den;
  Rational value = MakeRational(
      UniformInt(rng, 0, ToI64(Floor(top))), value_den);
  return Item::Create(std::move(size), std::move(value));
}

}  // namespace

std::int64_t UniformInt(SplitMix64& rng, std::int64_t lo, std::int64_t hi) {
  Require(lo <= hi, "empty integer range");
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return dist(rng);
}

Instance RandomInstance(SplitMix64& rng, const RandomInstanceOptions& options) {
  Require(options.min_items >= 0 && options.min_items <= options.max_items,
          "bad item count range");
  Require(options.max_denominator >= 1, "bad denominator bound");
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    const int n = static_cast<int>(
        UniformInt(rng, options.min_items, options.max_items));
    std::vector<Item> items;
    BigInt common = 1;
    for (int i = 0; i < n; ++i) {
      const std::int64_t q = UniformInt(rng, 1, options.max_denominator);
      const std::int64_t v = UniformInt(rng, 1, options.max_denominator);
      // Smallest numerator keeping size >= 1/min_size_inverse.
      std::int64_t min_num = 1;
      if (options.min_size_inverse > 0) {
        min_num = (q + options.min_size_inverse - 1) / options.min_size_inverse;
      }
      items.push_back(RandomItem(rng, options.kind, q, v, min_num,
                                 options.max_value_ratio));
      common = Lcm(common, items.back().size().get_den());
    }
    if (common <= options.max_common_denominator) {
      return Instance::Create(std::move(items), options.kind);
    }
  }
  Fail(ErrorCode::kLimitExceeded, "could not draw an instance within limits");
}

Instance RandomInstanceSharedDenominator(SplitMix64& rng, InstanceKind kind,
                                         int min_items, int max_items,
                                         int max_denominator) {
  Require(max_denominator >= 2, "bad denominator bound");
  const int n = static_cast<int>(UniformInt(rng, min_items, max_items));
  const std::int64_t q = UniformInt(rng, 2, max_denominator);
  std::vector<Item> items;
  for (int i = 0; i < n; ++i) {
    items.push_back(RandomItem(rng, kind, q, q, 1, 3));
  }
  return Instance::Create(std::move(items), kind);
}

Instance RandomInstanceTwoDenominators(SplitMix64& rng, InstanceKind kind,
                                       int min_items, int max_items,
                                       int max_denominator) {
  Require(max_denominator >= 2, "bad denominator bound");
  const int n = static_cast<int>(UniformInt(rng, min_items, max_items));
  const std::int64_t dens[2] = {UniformInt(rng, 2, max_denominator),
                                UniformInt(rng, 2, max_denominator)};
  std::vector<Item> items;
  for (int i = 0; i < n; ++i) {
    const std::int64_t q = dens[UniformInt(rng, 0, 1)];
    // One item in three is drawn from the smallest tenth of the range.
    const std::int64_t hi =
        UniformInt(rng, 0, 2) == 0 ? std::max<std::int64_t>(1, q / 10) : q;
    Rational size = MakeRational(UniformInt(rng, 1, hi), q);
    if (kind == InstanceKind::kSimple) {
      items.push_back(Item::Create(size, size));
      continue;
    }
    const std::int64_t vq = dens[UniformInt(rng, 0, 1)];
    Rational value = MakeRational(UniformInt(rng, 0, 3 * vq), vq);
    items.push_back(Item::Create(std::move(size), std::move(value)));
  }
  return Instance::Create(std::move(items), kind);
}

}  // namespace okp
