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

// Exact minimax solvers on finite families: the best deterministic strategy
// (optionally choosing among 2^b strategies with b advice bits), and the
// best randomized acceptance probabilities on single-copy chains.

#ifndef OKP_MINIMAX_H_
#define OKP_MINIMAX_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "okp/family.h"
#include "okp/instance.h"
#include "okp/numerics.h"
#include "okp/oracle.h"

namespace okp {

struct MinimaxOptions {
  // Cap on memoized (node, fill, gain) states or outcome vectors.
  std::size_t max_states = 4'000'000;
  OracleOptions oracle;
};

// Knapsack state just before the item of `node` arrives.
struct DecisionKey {
  int node = 0;
  Rational fill;
  Rational gain;

  friend bool operator<(const DecisionKey& a, const DecisionKey& b);
};

struct DetMinimaxResult {
  Ratio ratio;
  // Copies of the item at `node` packed by the optimal strategy.
  std::map<DecisionKey, std::uint64_t> witness;
  std::vector<Rational> opts;         // per family instance
  std::vector<Ratio> instance_ratios;  // witness replayed on every instance
  std::size_t states = 0;
};

// opt of every family instance in canonical order. When every item has
// size >= 1/2 at most one kind of item fits, so opt is the best solo gain
// and no DP is needed.
std::vector<Rational> FamilyOpts(const ChainFamily& family,
                                 const OracleOptions& options = {});

DetMinimaxResult DetMinimax(const ChainFamily& family,
                            const MinimaxOptions& options = {});

// Replays a deterministic witness on instance `index` of the family.
RunTrace ReplayWitness(const ChainFamily& family,
                       const std::map<DecisionKey, std::uint64_t>& witness,
                       std::size_t index);

struct AdviceMinimaxResult {
  Ratio ratio;
  int advice_bits = 0;
  // Per-instance ratios of each chosen strategy (at most 2^b of them).
  std::vector<std::vector<Ratio>> strategies;
  // Advice word given to each instance: index into `strategies`.
  std::vector<int> assignment;
  std::vector<Ratio> instance_ratios;
  std::size_t outcome_vectors = 0;  // Pareto-optimal strategy outcomes
};

// Minimizes, over sets of 2^b deterministic strategies, the worst instance
// ratio when the oracle picks the best strategy of the set per instance.
AdviceMinimaxResult DetMinimaxWithAdvice(const ChainFamily& family,
                                         int advice_bits,
                                         const MinimaxOptions& options = {});

struct DistinctDecisions {
  int instances = 0;
  int distinct = 0;
  int advice_bits_lower_bound = 0;  // ceil(log2(distinct))
  // Per instance: the unique multiplicity of the first item that reaches
  // opt, or -1 if it is not unique.
  std::vector<int> required;
  // Per instance: every first-item multiplicity that reaches opt.
  std::vector<std::vector<int>> optimal;
};

// For every instance, the first-item multiplicities that still allow an
// optimal packing, computed with a capacity profile of the remaining items.
// `distinct` is the number of decisions an exact algorithm needs: the
// unique multiplicities, plus one for each instance whose optimal
// multiplicities are not yet covered.
DistinctDecisions DistinctFirstDecisions(const ChainFamily& family,
                                         const OracleOptions& options = {});

struct RandomizedChainResult {
  Rational ratio;                    // c
  std::vector<Rational> probabilities;  // acceptance probability per step
  std::vector<Rational> gains;        // g_k
  std::vector<Rational> opts;         // opt_k
  std::vector<Ratio> instance_ratios;
};

// Equalizing acceptance probabilities for a chain on which at most one item
// is ever packed: c = sum_k (opt_k - opt_{k-1}) / g_k and
// p_k = (opt_k - opt_{k-1}) / (c g_k). Every prefix must be an instance and
// every item larger than 1/2 (at least 1/2 in limit mode).
RandomizedChainResult RandMinimaxChain(const ChainFamily& family);

// opt_k / sum_{j<=k} p_j g_j on every prefix, for arbitrary probabilities.
std::vector<Ratio> ChainExpectedRatios(const RandomizedChainResult& chain,
                                       const std::vector<Rational>& p);

struct ShiftCheck {
  bool passed = true;
  int checked = 0;
  std::vector<std::string> failures;
};

// Moves `delta` of probability between consecutive steps i and i+1 of the
// equalizing solution, in both directions, and checks that the ratios of
// earlier prefixes do not change while step i and later steps move strictly
// in opposite directions.
ShiftCheck CheckProbabilityShift(const RandomizedChainResult& chain,
                                 const Rational& delta);

// Worst ratio when the accept decision is driven by one fair or fixed bit:
// the first item is accepted with probability p and the second otherwise.
Ratio TwoInstanceBitRatio(const RandomizedChainResult& chain,
                          const Rational& p);

// Exact expected gains and ratios of the threshold strategy on every
// instance of a family whose items all have size >= 1/2.
std::vector<double> ThresholdExpectedGains(const ThresholdDistribution& dist,
                                           const ChainFamily& family);
std::vector<double> ThresholdExpectedRatios(const ThresholdDistribution& dist,
                                            const ChainFamily& family);

}  // namespace okp

#endif  // OKP_MINIMAX_H_
