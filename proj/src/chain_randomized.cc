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

#include <cmath>
#include <limits>
#include <string>

#include "okp/error.h"
#include "okp/minimax.h"

namespace okp {

RandomizedChainResult RandMinimaxChain(const ChainFamily& family) {
  if (!family.IsChain()) {
    Fail(ErrorCode::kInvalidArgument, "randomized solver needs a chain family");
  }
  if (!family.is_simple_family()) {
    Fail(ErrorCode::kInvalidArgument,
         "randomized solver needs a simple family");
  }
  const std::vector<Item> items = family.MasterSequence();
  if (family.instance_count() != items.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "randomized solver needs every prefix to be an instance");
  }
  const bool limit = family.params().limit;
  RandomizedChainResult result;
  Rational running_opt = 0;
  for (const Item& item : items) {
    const int half = cmp(item.size() * 2, 1);
    if (half < 0 || (half == 0 && !limit)) {
      Fail(ErrorCode::kInvalidArgument,
           "randomized solver needs items larger than 1/2, got " +
               ToString(item.size()));
    }
    // At most one item is ever packed, so g_k is one copy.
    result.gains.push_back(item.value());
    if (item.value() > running_opt) running_opt = item.value();
    result.opts.push_back(running_opt);
  }
  result.ratio = 0;
  std::vector<Rational> increments;
  for (std::size_t k = 0; k < items.size(); ++k) {
    Rational increment =
        k == 0 ? result.opts[0] : result.opts[k] - result.opts[k - 1];
    result.ratio += increment / result.gains[k];
    increments.push_back(std::move(increment));
  }
  for (std::size_t k = 0; k < items.size(); ++k) {
    Rational p = increments[k] / (result.ratio * result.gains[k]);
    result.probabilities.push_back(std::move(p));
  }
  result.instance_ratios = ChainExpectedRatios(result, result.probabilities);
  const Ratio c = Ratio::Finite(result.ratio);
  for (const Ratio& r : result.instance_ratios) {
    if (!(r == c)) {
      Fail(ErrorCode::kInternal, "equalization failed: " + r.ToString() +
                                     " vs " + c.ToString());
    }
  }
  return result;
}

std::vector<Ratio> ChainExpectedRatios(const RandomizedChainResult& chain,
                                       const std::vector<Rational>& p) {
  Require(p.size() == chain.gains.size(), "one probability per chain step");
  std::vector<Ratio> ratios;
  ratios.reserve(p.size());
  Rational expected = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    expected += p[k] * chain.gains[k];
    ratios.push_back(Ratio::Of(chain.opts[k], expected));
  }
  return ratios;
}

ShiftCheck CheckProbabilityShift(const RandomizedChainResult& chain,
                                 const Rational& delta) {
  Require(sgn(delta) > 0, "shift must be positive");
  const std::vector<Ratio>& base = chain.instance_ratios;
  const std::size_t steps = chain.probabilities.size();
  ShiftCheck check;
  auto fail = [&](std::size_t i, int direction, std::size_t j,
                  const char* what) {
    check.passed = false;
    check.failures.push_back("shift at " + std::to_string(i) +
                             (direction > 0 ? " (+)" : " (-)") + ": ratio " +
                             std::to_string(j) + " " + what);
  };
  for (std::size_t i = 0; i + 1 < steps; ++i) {
    for (int direction : {+1, -1}) {
      std::vector<Rational> p = chain.probabilities;
      Rational moved = delta * direction;
      p[i] += moved;
      p[i + 1] -= moved;
      if (sgn(p[i]) < 0 || sgn(p[i + 1]) < 0) {
        fail(i, direction, i, "shift leaves a negative probability");
        continue;
      }
      const std::vector<Ratio> shifted = ChainExpectedRatios(chain, p);
      for (std::size_t j = 0; j < steps; ++j) {
        ++check.checked;
        if (j < i) {
          if (!(shifted[j] == base[j])) fail(i, direction, j, "changed");
        } else if ((j == i) == (direction > 0)) {
          // Step i gains mass under +, later steps lose gain.
          if (!(shifted[j] < base[j])) fail(i, direction, j, "did not drop");
        } else {
          if (!(shifted[j] > base[j])) fail(i, direction, j, "did not rise");
        }
      }
    }
  }
  return check;
}

Ratio TwoInstanceBitRatio(const RandomizedChainResult& chain,
                          const Rational& p) {
  Require(chain.gains.size() == 2, "bit check needs a two-step chain");
  Require(sgn(p) >= 0 && p <= 1, "probability outside [0, 1]");
  const std::vector<Ratio> ratios =
      ChainExpectedRatios(chain, {p, Rational(1 - p)});
  return ratios[0] < ratios[1] ? ratios[1] : ratios[0];
}

std::vector<double> ThresholdExpectedGains(const ThresholdDistribution& dist,
                                           const ChainFamily& family) {
  Require(family.is_simple_family(), "threshold strategy needs simple items");
  for (std::size_t u = 1; u < family.node_count(); ++u) {
    if (family.node(u).item->size() * 2 < 1) {
      Fail(ErrorCode::kInvalidArgument,
           "exact threshold expectation needs items of size >= 1/2");
    }
  }
  std::vector<double> expected_gain(family.node_count(), 0);
  std::vector<double> prefix_max(family.node_count(), 0);
  // Nodes are created after their parents, so one forward pass suffices.
  // Once an item of size >= 1/2 is packed nothing later fits, so the gain
  // is the solo gain of the item that reaches the threshold first.
  for (std::size_t u = 1; u < family.node_count(); ++u) {
    const ChainFamily::Node& node = family.node(u);
    const double x_star = node.item->solo_gain_double();
    double gain = expected_gain[node.parent];
    double high = prefix_max[node.parent];
    if (x_star > high) {
      gain += (dist.Cdf(x_star) - dist.Cdf(high)) * x_star;
      high = x_star;
    }
    expected_gain[u] = gain;
    prefix_max[u] = high;
  }
  std::vector<double> gains;
  for (int t : family.terminals()) gains.push_back(expected_gain[t]);
  return gains;
}

std::vector<double> ThresholdExpectedRatios(const ThresholdDistribution& dist,
                                            const ChainFamily& family) {
  const std::vector<double> gains = ThresholdExpectedGains(dist, family);
  const std::vector<Rational> opts = FamilyOpts(family);
  std::vector<double> ratios;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    ratios.push_back(gains[i] > 0 ? ToDouble(opts[i]) / gains[i]
                                  : std::numeric_limits<double>::infinity());
  }
  return ratios;
}

}  // namespace okp
