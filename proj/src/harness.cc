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

#include "okp/harness.h"

#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "okp/advice.h"
#include "okp/algorithms.h"
#include "okp/error.h"
#include "okp/minimax.h"
#include "okp/rng.h"

namespace okp {
namespace {

constexpr std::uint64_t kChunkTrials = 8192;

struct AlgorithmEntry {
  AlgorithmId id;
  std::string_view name;
  bool randomized;
};

constexpr AlgorithmEntry kAlgorithms[] = {
    {AlgorithmId::kFirstItemFill, "first_item_fill", false},
    {AlgorithmId::kGreedyFill, "greedy_fill", false},
    {AlgorithmId::kWaitAndFill, "wait_and_fill", false},
    {AlgorithmId::kThresholdRandomized, "threshold_randomized", true},
    {AlgorithmId::kMixture, "mixture", true},
    {AlgorithmId::kPrefixFamily, "prefix_family", true},
    {AlgorithmId::kOneBit, "one_bit", false},
    {AlgorithmId::kEpsAdvice, "eps_advice", false},
};

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double RatioOf(double opt, double gain) {
  if (gain > 0) return opt / gain;
  return opt > 0 ? kInfinity : 1.0;
}

void CheckDominance(const Rational& opt, const Rational& gain,
                    const std::string& id) {
  if (gain > opt) {
    Fail(ErrorCode::kInternal, "gain " + ToString(gain) + " exceeds opt " +
                                   ToString(opt) + " on " + id);
  }
}

// Per-trial policy factory for the randomized algorithms.
class TrialPolicyFactory {
 public:
  TrialPolicyFactory(const ExperimentConfig& config, const Instance& master)
      : config_(config) {
    switch (config.algorithm) {
      case AlgorithmId::kThresholdRandomized:
        dist_ = &SharedThresholdDistribution(config.tolerance);
        break;
      case AlgorithmId::kMixture:
        Require(sgn(config.p) > 0 && config.p < 1,
                "mixture probability must lie in (0, 1)");
        p_double_ = ToDouble(config.p);
        break;
      case AlgorithmId::kPrefixFamily:
        Require(config.n >= 1, "prefix_family needs n >= 1");
        cumulative_ = PrefixCumulative(config.n);
        for (const Item& item : master.items()) {
          buckets_.push_back(PrefixBucket(item.size(), config.n));
        }
        break;
      default:
        Fail(ErrorCode::kInvalidArgument, "algorithm is not randomized");
    }
  }

  std::unique_ptr<OnlinePolicy> Make(std::uint64_t seed) const {
    SplitMix64 rng(seed);
    const double u = UniformDouble(rng);
    switch (config_.algorithm) {
      case AlgorithmId::kThresholdRandomized:
        return std::make_unique<ThresholdPolicy>(dist_->Sample(u));
      case AlgorithmId::kMixture:
        if (u < p_double_) return std::make_unique<GreedyPolicy>();
        return std::make_unique<WaitAndFillPolicy>();
      default:
        return std::make_unique<PrefixBucketPolicy>(
            config_.n, DrawPrefixBucket(cumulative_, u), &buckets_);
    }
  }

 private:
  const ExperimentConfig& config_;
  const ThresholdDistribution* dist_ = nullptr;
  double p_double_ = 0;
  std::vector<double> cumulative_;
  std::vector<int> buckets_;
};

struct Moments {
  long double sum = 0;
  long double sum_squares = 0;
};

MonteCarloEstimate Finish(const Moments& m, std::uint64_t trials,
                          double opt) {
  MonteCarloEstimate e;
  e.trials = trials;
  const long double n = static_cast<long double>(trials);
  const long double mean = m.sum / n;
  e.mean_gain = static_cast<double>(mean);
  if (trials > 1) {
    long double variance = (m.sum_squares - n * mean * mean) / (n - 1);
    if (variance < 0) variance = 0;
    e.standard_error = static_cast<double>(std::sqrt(variance / n));
  }
  e.ratio = RatioOf(opt, e.mean_gain);
  return e;
}

std::optional<double> ZScore(const MonteCarloEstimate& mc, double exact) {
  const double diff = mc.mean_gain - exact;
  if (mc.standard_error > 0) return diff / mc.standard_error;
  if (std::abs(diff) <= 1e-12 * std::max(1.0, std::abs(exact))) return 0.0;
  return diff > 0 ? kInfinity : -kInfinity;
}

}  // namespace

AlgorithmId ParseAlgorithm(std::string_view name) {
  for (const AlgorithmEntry& entry : kAlgorithms) {
    if (entry.name == name) return entry.id;
  }
  Fail(ErrorCode::kInvalidArgument,
       "unknown algorithm '" + std::string(name) + "'");
}

std::string_view AlgorithmName(AlgorithmId id) {
  for (const AlgorithmEntry& entry : kAlgorithms) {
    if (entry.id == id) return entry.name;
  }
  return "unknown";
}

bool IsRandomized(AlgorithmId id) {
  for (const AlgorithmEntry& entry : kAlgorithms) {
    if (entry.id == id) return entry.randomized;
  }
  return false;
}

std::vector<std::string_view> AlgorithmNames() {
  std::vector<std::string_view> names;
  for (const AlgorithmEntry& entry : kAlgorithms) names.push_back(entry.name);
  return names;
}

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

const ThresholdDistribution& SharedThresholdDistribution(double tolerance) {
  static std::mutex mutex;
  static std::map<double, std::unique_ptr<ThresholdDistribution>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(tolerance);
  if (it == cache.end()) {
    it = cache
             .emplace(tolerance, std::make_unique<ThresholdDistribution>(
                                     ThresholdDistribution::Compute(tolerance)))
             .first;
  }
  return *it->second;
}

std::vector<MonteCarloEstimate> MonteCarloGains(
    const ExperimentConfig& config, const Instance& instance,
    std::uint64_t stream, const std::vector<std::size_t>& positions) {
  Require(config.trials >= 1, "trials must be at least 1");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    Require(positions[i] < instance.size() &&
                (i == 0 || positions[i] > positions[i - 1]),
            "positions must be increasing item indices");
  }
  const TrialPolicyFactory factory(config, instance);
  const std::uint64_t chunks =
      (config.trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<std::vector<Moments>> partial(
      chunks, std::vector<Moments>(positions.size()));
  std::atomic<std::uint64_t> next_chunk{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    try {
      std::vector<double> gains(positions.size());
      for (std::uint64_t chunk = next_chunk++; chunk < chunks;
           chunk = next_chunk++) {
        const std::uint64_t begin = chunk * kChunkTrials;
        const std::uint64_t end =
            std::min<std::uint64_t>(config.trials, begin + kChunkTrials);
        std::vector<Moments>& out = partial[chunk];
        for (std::uint64_t trial = begin; trial < end; ++trial) {
          std::unique_ptr<OnlinePolicy> policy =
              factory.Make(DeriveSeed(config.seed, stream, trial));
          std::size_t cursor = 0;
          RunOnlineStreaming(instance, *policy,
                             [&](std::size_t index, double gain) {
                               if (cursor < positions.size() &&
                                   positions[cursor] == index) {
                                 gains[cursor++] = gain;
                               }
                             });
          for (std::size_t k = 0; k < positions.size(); ++k) {
            out[k].sum += gains[k];
            out[k].sum_squares +=
                static_cast<long double>(gains[k]) * gains[k];
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next_chunk = chunks;
    }
  };
  const int threads = std::min<int>(ResolveThreads(config.threads),
                                    static_cast<int>(chunks));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  // Reduce in chunk order so the result does not depend on scheduling.
  std::vector<Moments> total(positions.size());
  for (const std::vector<Moments>& chunk : partial) {
    for (std::size_t k = 0; k < positions.size(); ++k) {
      total[k].sum += chunk[k].sum;
      total[k].sum_squares += chunk[k].sum_squares;
    }
  }
  std::vector<MonteCarloEstimate> estimates;
  for (const Moments& m : total) estimates.push_back(Finish(m, config.trials, 0));
  return estimates;
}

RatioReport EvaluateDeterministic(const ExperimentConfig& config,
                                  const std::vector<Instance>& instances,
                                  const std::vector<std::string>& ids,
                                  const std::vector<Rational>& opts) {
  Require(!IsRandomized(config.algorithm),
          "use the randomized evaluation for " +
              std::string(AlgorithmName(config.algorithm)));
  Require(instances.size() == ids.size() && ids.size() == opts.size(),
          "instances, ids and opts must align");
  RatioReport report;
  report.algorithm = std::string(AlgorithmName(config.algorithm));
  report.seed = config.seed;
  report.randomized = false;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& instance = instances[i];
    InstanceRecord record;
    record.id = ids[i];
    record.opt = opts[i];
    RunTrace trace;
    switch (config.algorithm) {
      case AlgorithmId::kFirstItemFill:
        trace = FirstItemFill(instance);
        break;
      case AlgorithmId::kGreedyFill:
        trace = GreedyFill(instance);
        break;
      case AlgorithmId::kWaitAndFill:
        trace = WaitAndFill(instance);
        break;
      case AlgorithmId::kOneBit: {
        AdviceTape tape = OneBitOracle(instance);
        record.tape_hex = tape.ToHex();
        trace = OneBitAlgorithm(instance, std::move(tape));
        break;
      }
      case AlgorithmId::kEpsAdvice: {
        AdviceTape tape = EpsAdviceOracle(instance, config.eps, config.oracle);
        record.tape_hex = tape.ToHex();
        trace = EpsAdviceAlgorithm(instance, config.eps, std::move(tape));
        break;
      }
      default:
        Fail(ErrorCode::kInternal, "unhandled deterministic algorithm");
    }
    CheckDominance(record.opt, trace.gain, record.id);
    record.gain = trace.gain;
    record.exact_ratio = Ratio::Of(record.opt, trace.gain);
    record.ratio = record.exact_ratio->ToDouble();
    record.bits_read = trace.bits_read;
    record.decisions = std::move(trace.decisions);
    if (!report.worst_exact_ratio || *record.exact_ratio > *report.worst_exact_ratio) {
      report.worst_exact_ratio = record.exact_ratio;
      report.worst_ratio = record.ratio;
      report.worst_id = record.id;
    }
    report.records.push_back(std::move(record));
  }
  return report;
}

RatioReport EvaluateRandomized(
    const ExperimentConfig& config, const std::vector<Instance>& instances,
    const std::vector<std::string>& ids, const std::vector<Rational>& opts,
    bool shared_chain,
    const std::optional<std::vector<double>>& threshold_gains) {
  Require(IsRandomized(config.algorithm),
          std::string(AlgorithmName(config.algorithm)) + " is deterministic");
  Require(instances.size() == ids.size() && ids.size() == opts.size(),
          "instances, ids and opts must align");
  Require(config.trials >= 1, "randomized evaluation needs trials >= 1");
  RatioReport report;
  report.algorithm = std::string(AlgorithmName(config.algorithm));
  report.seed = config.seed;
  report.trials = config.trials;
  report.randomized = true;

  // Monte Carlo estimates of E[gain] per instance.
  std::vector<MonteCarloEstimate> mc(instances.size());
  if (shared_chain && !instances.empty()) {
    std::size_t longest = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (instances[i].size() > instances[longest].size()) longest = i;
    }
    std::vector<std::size_t> positions;
    for (const Instance& instance : instances) {
      Require(!instance.empty(), "chain instances must be nonempty");
      positions.push_back(instance.size() - 1);
    }
    std::vector<std::size_t> order(positions);
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    const std::vector<MonteCarloEstimate> by_position =
        MonteCarloGains(config, instances[longest], 0, order);
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const std::size_t k =
          std::lower_bound(order.begin(), order.end(), positions[i]) -
          order.begin();
      mc[i] = by_position[k];
    }
  } else {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (instances[i].empty()) {
        mc[i].trials = config.trials;
        continue;
      }
      mc[i] = MonteCarloGains(config, instances[i], i,
                              {instances[i].size() - 1})[0];
    }
  }

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& instance = instances[i];
    InstanceRecord record;
    record.id = ids[i];
    record.opt = opts[i];
    const double opt = ToDouble(record.opt);
    switch (config.algorithm) {
      case AlgorithmId::kMixture:
        record.gain = MixtureExpectedGain(instance, config.p);
        break;
      case AlgorithmId::kPrefixFamily:
        record.gain = PrefixExpectedGain(instance, config.n);
        break;
      case AlgorithmId::kThresholdRandomized:
        record.expected_gain =
            threshold_gains
                ? (*threshold_gains)[i]
                : ThresholdExpectedGain(
                      instance, SharedThresholdDistribution(config.tolerance));
        break;
      default:
        Fail(ErrorCode::kInternal, "unhandled randomized algorithm");
    }
    if (record.gain) {
      CheckDominance(record.opt, *record.gain, record.id);
      record.expected_gain = ToDouble(*record.gain);
      record.exact_ratio = Ratio::Of(record.opt, *record.gain);
      record.ratio = record.exact_ratio->ToDouble();
    } else {
      record.ratio = RatioOf(opt, *record.expected_gain);
    }
    mc[i].ratio = RatioOf(opt, mc[i].mean_gain);
    record.monte_carlo = mc[i];
    record.z_score = ZScore(mc[i], *record.expected_gain);
    if (report.records.empty() || record.ratio > report.worst_ratio) {
      report.worst_ratio = record.ratio;
      report.worst_id = record.id;
    }
    report.records.push_back(std::move(record));
  }
  return report;
}

RatioReport EvaluateFamily(const ExperimentConfig& config,
                           const ChainFamily& family) {
  ExperimentConfig effective = config;
  if (effective.algorithm == AlgorithmId::kPrefixFamily && effective.n == 0 &&
      family.params().kind == FamilyKind::kPrefix) {
    effective.n = family.params().n;
  }
  const std::vector<Instance> instances = family.Instances();
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < family.instance_count(); ++i) {
    ids.push_back(family.Label(i));
  }
  const std::vector<Rational> opts = FamilyOpts(family, config.oracle);
  RatioReport report;
  if (!IsRandomized(effective.algorithm)) {
    report = EvaluateDeterministic(effective, instances, ids, opts);
  } else {
    std::optional<std::vector<double>> threshold_gains;
    bool all_large = true;
    for (std::size_t u = 1; u < family.node_count(); ++u) {
      if (family.node(u).item->size() * 2 < 1) all_large = false;
    }
    if (effective.algorithm == AlgorithmId::kThresholdRandomized && all_large) {
      threshold_gains = ThresholdExpectedGains(
          SharedThresholdDistribution(effective.tolerance), family);
    }
    report = EvaluateRandomized(effective, instances, ids, opts,
                                family.IsChain(), threshold_gains);
  }
  report.source = FormatFamilySpec(family.params());
  return report;
}

RatioReport EvaluateInstance(const ExperimentConfig& config,
                             const Instance& instance, const std::string& id) {
  const std::vector<Rational> opts{OptUnbounded(instance, config.oracle).value};
  RatioReport report =
      IsRandomized(config.algorithm)
          ? EvaluateRandomized(config, {instance}, {id}, opts, false)
          : EvaluateDeterministic(config, {instance}, {id}, opts);
  report.source = id;
  return report;
}

}  // namespace okp
