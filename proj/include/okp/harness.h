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

// Experiment orchestration: runs an algorithm on instances or families,
// compares against the offline optimum, and estimates expectations of the
// randomized strategies by seeded Monte Carlo.
//
// Ratios are always opt / E[gain], never E[opt / gain].

#ifndef OKP_HARNESS_H_
#define OKP_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "okp/family.h"
#include "okp/instance.h"
#include "okp/numerics.h"
#include "okp/oracle.h"

namespace okp {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

enum class AlgorithmId {
  kFirstItemFill,
  kGreedyFill,
  kWaitAndFill,
  kThresholdRandomized,
  kMixture,
  kPrefixFamily,
  kOneBit,
  kEpsAdvice,
};

AlgorithmId ParseAlgorithm(std::string_view name);
std::string_view AlgorithmName(AlgorithmId id);
bool IsRandomized(AlgorithmId id);
// Names accepted by ParseAlgorithm, in declaration order.
std::vector<std::string_view> AlgorithmNames();

struct ExperimentConfig {
  AlgorithmId algorithm = AlgorithmId::kFirstItemFill;
  std::uint64_t seed = kDefaultSeed;
  // Monte Carlo trials per instance; ignored by deterministic algorithms.
  std::uint64_t trials = 100'000;
  Rational eps = Rational(1, 10);  // advice accuracy
  Rational p = Rational(3, 4);     // mixture probability of greedy
  int n = 0;                       // prefix strategy resolution
  int threads = 0;                 // 0 selects the hardware concurrency
  double tolerance = 1e-10;        // threshold distribution quadrature
  OracleOptions oracle;
};

struct MonteCarloEstimate {
  double mean_gain = 0;
  double standard_error = 0;  // sample standard deviation / sqrt(trials)
  std::uint64_t trials = 0;
  double ratio = 0;           // opt / mean_gain, +inf when the mean is 0
};

struct InstanceRecord {
  std::string id;
  Rational opt;
  // Exact gain of a deterministic run, or the exact rational expectation of
  // a randomized one when it exists.
  std::optional<Rational> gain;
  // Expected gain; exact up to quadrature for the threshold strategy.
  std::optional<double> expected_gain;
  std::optional<MonteCarloEstimate> monte_carlo;
  // (Monte Carlo mean - exact expectation) / standard error.
  std::optional<double> z_score;
  // Exact ratio when `gain` is known.
  std::optional<Ratio> exact_ratio;
  double ratio = 0;  // best available value; +inf when unbounded
  std::uint64_t bits_read = 0;
  std::string tape_hex;
  std::vector<std::uint64_t> decisions;
};

struct RatioReport {
  std::string algorithm;
  std::string source;  // family spec or file name
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  bool randomized = false;
  std::vector<InstanceRecord> records;
  double worst_ratio = 0;
  std::optional<Ratio> worst_exact_ratio;  // deterministic runs
  std::string worst_id;
};

RatioReport EvaluateDeterministic(const ExperimentConfig& config,
                                  const std::vector<Instance>& instances,
                                  const std::vector<std::string>& ids,
                                  const std::vector<Rational>& opts);

// For chain families all instances share one run per trial on the master
// sequence (common random numbers); otherwise each instance gets its own
// stream of per-trial seeds. `threshold_gains`, when given, supplies the
// exact expectations of the threshold strategy.
RatioReport EvaluateRandomized(
    const ExperimentConfig& config, const std::vector<Instance>& instances,
    const std::vector<std::string>& ids, const std::vector<Rational>& opts,
    bool shared_chain,
    const std::optional<std::vector<double>>& threshold_gains = std::nullopt);

// Evaluates every instance of a family; opts come from FamilyOpts.
RatioReport EvaluateFamily(const ExperimentConfig& config,
                           const ChainFamily& family);
// Evaluates a single instance (the `run` subcommand).
RatioReport EvaluateInstance(const ExperimentConfig& config,
                             const Instance& instance, const std::string& id);

// Shared threshold distribution for a tolerance; computed once per process.
const ThresholdDistribution& SharedThresholdDistribution(double tolerance);

// Runs `trials` seeded trials of a randomized algorithm and returns, per
// reported position, the gain statistics. Exposed for tests.
std::vector<MonteCarloEstimate> MonteCarloGains(
    const ExperimentConfig& config, const Instance& instance,
    std::uint64_t stream, const std::vector<std::size_t>& positions);

int ResolveThreads(int requested);

}  // namespace okp

#endif  // OKP_HARNESS_H_
