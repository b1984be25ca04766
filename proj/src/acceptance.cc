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

#include "okp/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "okp/advice.h"
#include "okp/algorithms.h"
#include "okp/error.h"
#include "okp/family.h"
#include "okp/minimax.h"
#include "okp/numerics.h"
#include "okp/oracle.h"
#include "okp/random_instances.h"
#include "okp/rng.h"

namespace okp {
namespace {

// Collects pass/fail state and a short human-readable detail.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      if (failures_++ < 5) Note("FAILED " + what);
    }
  }
  void Note(const std::string& text) {
    if (!detail_.empty()) detail_ += "; ";
    detail_ += text;
  }
  bool passed() const { return passed_; }
  std::string detail() const {
    if (failures_ > 5) {
      return detail_ + "; " + std::to_string(failures_ - 5) + " more failures";
    }
    return detail_;
  }

 private:
  bool passed_ = true;
  int failures_ = 0;
  std::string detail_;
};

std::string Fmt(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

ChainFamily Family(std::string_view spec) {
  return ChainFamily::Generate(ParseFamilySpec(spec));
}

std::uint64_t StreamSeed(const AcceptanceOptions& options, int criterion,
                         std::uint64_t index) {
  return DeriveSeed(options.seed, 1000 + criterion, index);
}

void OracleEquivalence(const AcceptanceOptions& options, Check& check) {
  int compared = 0;
  for (InstanceKind kind : {InstanceKind::kSimple, InstanceKind::kGeneral}) {
    RandomInstanceOptions gen;
    gen.kind = kind;
    gen.min_items = 0;
    gen.max_items = 6;
    gen.max_denominator = 20;
    gen.max_common_denominator = std::numeric_limits<std::uint64_t>::max();
    SplitMix64 rng(StreamSeed(options, 1, static_cast<int>(kind)));
    for (int i = 0; i < 250; ++i) {
      const Instance instance = RandomInstance(rng, gen);
      const OptResult dp = OptUnbounded(instance);
      Rational brute = OptBruteForce(instance);
      check.Expect(dp.value == brute, "instance " + FormatInstanceText(instance) +
                                          ": dp " + ToString(dp.value) +
                                          " brute " + ToString(brute));
      check.Expect(dp.witness.IsFeasible(instance) &&
                       dp.witness.TotalValue(instance) == dp.value,
                   "witness of " + FormatInstanceText(instance));
      ++compared;
    }
  }
  check.Note(std::to_string(compared) + " instances, exact equality");
}

void FirstItemBounds(const AcceptanceOptions& options, Check& check) {
  RandomInstanceOptions gen;
  gen.min_items = 1;
  gen.max_items = 8;
  gen.max_denominator = 100;
  gen.max_common_denominator = std::numeric_limits<std::uint64_t>::max();
  SplitMix64 rng(StreamSeed(options, 2, 0));
  Rational worst = 1;
  for (int i = 0; i < 100'000; ++i) {
    const Instance instance = RandomInstance(rng, gen);
    const RunTrace trace = FirstItemFill(instance);
    check.Expect(trace.gain * 2 >= 1,
                 "gain " + ToString(trace.gain) + " on " +
                     FormatInstanceText(instance));
    worst = std::min(worst, trace.gain);
  }
  check.Note("min gain " + ToString(worst) + " over 100000 instances");
  for (int inv_eps : {10, 100, 1000}) {
    const Rational eps = MakeRational(1, inv_eps);
    const Rational expected = 1 / (Rational(1, 2) + eps);
    const std::string spec = "det2:eps=1/" + std::to_string(inv_eps);
    const DetMinimaxResult result = DetMinimax(Family(spec));
    check.Expect(result.ratio == Ratio::Finite(expected),
                 std::string(spec) + " minimax " + result.ratio.ToString());
    check.Note(std::string(spec) + " -> " + result.ratio.ToString());
  }
}

void RandomizedTwoInstances(const AcceptanceOptions&, Check& check) {
  const RandomizedChainResult chain =
      RandMinimaxChain(Family("det2:eps=1/1000000"));
  const Rational bound = 2 - Rational(1, 100'000);
  for (const Rational& p : {Rational(0), Rational(1, 2), Rational(1)}) {
    const Ratio worst = TwoInstanceBitRatio(chain, p);
    check.Expect(worst >= Ratio::Finite(bound),
                 "p=" + ToString(p) + " ratio " + worst.ToString());
    check.Note("p=" + ToString(p) + " -> " +
               (worst.unbounded() ? "unbounded" : Fmt(worst.ToDouble())));
  }
}

void Equalization(const AcceptanceOptions&, Check& check) {
  const RandomizedChainResult det2 = RandMinimaxChain(Family("det2:limit"));
  check.Expect(det2.ratio == Rational(3, 2), "det2 " + ToString(det2.ratio));
  const RandomizedChainResult three = RandMinimaxChain(Family("three:limit"));
  check.Expect(three.ratio == Rational(19, 12),
               "three " + ToString(three.ratio));
  check.Note("det2 " + ToString(det2.ratio) + ", three " +
             ToString(three.ratio));
  for (int n : {1, 2, 5, 10, 100, 1000}) {
    const RandomizedChainResult chain = RandMinimaxChain(
        Family("prefix:n=" + std::to_string(n) + ",limit"));
    check.Expect(chain.ratio == 1 + HarmonicDiff(n),
                 "prefix n=" + std::to_string(n));
  }
  check.Note("prefix n in {1,2,5,10,100,1000} equal 1+H_2n-H_n");
  const RandomizedChainResult big =
      RandMinimaxChain(Family("prefix:n=10000,limit"));
  const Rational harmonic = 1 + HarmonicDiff(10'000);
  check.Expect(big.ratio == harmonic, "prefix n=10000 closed form");
  check.Expect(big.ratio > Rational(1693, 1000),
               "prefix n=10000 value " + Fmt(ToDouble(big.ratio)));
  check.Note("n=10000 -> " + Fmt(ToDouble(big.ratio)));
}

void PrefixStrategy(const AcceptanceOptions&, Check& check) {
  const int n = 100;
  const std::vector<Rational> p = PrefixProbabilities(n);
  Rational total = 0;
  for (const Rational& pk : p) total += pk;
  check.Expect(total == 1, "sum of probabilities " + ToString(total));
  const ChainFamily family = Family("prefix:n=100,eps=1/1000000");
  const std::vector<Rational> opts = FamilyOpts(family);
  Rational lo, hi;
  for (std::size_t i = 0; i < family.instance_count(); ++i) {
    Rational gain = PrefixExpectedGain(family.InstanceAt(family.terminals()[i]), n);
    Rational ratio = opts[i] / gain;
    if (i == 0 || ratio < lo) lo = ratio;
    if (i == 0 || ratio > hi) hi = ratio;
  }
  check.Expect(hi - lo <= Rational(1, 100'000),
               "spread " + Fmt(ToDouble(hi - lo)));
  check.Note("sum p_k = " + ToString(total) + ", ratios in [" +
             Fmt(ToDouble(lo)) + ", " + Fmt(ToDouble(hi)) + "], spread " +
             Fmt(ToDouble(hi - lo), 3));
}

void ProbabilityShift(const AcceptanceOptions&, Check& check) {
  const RandomizedChainResult chain =
      RandMinimaxChain(Family("prefix:n=50,limit"));
  const ShiftCheck shift = CheckProbabilityShift(chain, Rational(1, 1000));
  for (const std::string& failure : shift.failures) check.Expect(false, failure);
  check.Expect(shift.passed, "shift check");
  check.Note(std::to_string(shift.checked) + " ratio comparisons");
}

void Constants(const AcceptanceOptions&, Check& check) {
  const ThresholdDistribution& dist = SharedThresholdDistribution(1e-10);
  const double inv = 1.0 / dist.p_half();
  check.Expect(std::abs(dist.BalanceResidual()) <= 1e-9,
               "balance residual " + Fmt(dist.BalanceResidual(), 3));
  check.Expect(std::abs(dist.MassResidual()) <= 1e-9,
               "mass residual " + Fmt(dist.MassResidual(), 3));
  check.Expect(inv >= 1.7351 && inv <= 1.7353, "1/p_half " + Fmt(inv));
  check.Expect(dist.p_two_thirds() >= 0.122 && dist.p_two_thirds() <= 0.123,
               "p_two_thirds " + Fmt(dist.p_two_thirds()));
  check.Expect(std::abs(dist.Cdf(1.0) - 1) <= 1e-10,
               "cdf(1) " + Fmt(dist.Cdf(1.0), 16));
  check.Note("1/p_half=" + Fmt(inv) + " p_two_thirds=" +
             Fmt(dist.p_two_thirds()) + " residuals " +
             Fmt(dist.BalanceResidual(), 2) + ", " + Fmt(dist.MassResidual(), 2));
}

void ThresholdBehavior(const AcceptanceOptions& options, Check& check) {
  const ThresholdDistribution& dist = SharedThresholdDistribution(1e-10);
  const double bound = 1.0 / dist.p_half() + 1e-4;
  int cells = 0;
  int within = 0;
  for (const char* spec : {"prefix:n=1000,eps=1/1000000", "det2:eps=1/1000000"}) {
    const ChainFamily family = Family(spec);
    ExperimentConfig config;
    config.algorithm = AlgorithmId::kThresholdRandomized;
    config.seed = options.seed;
    config.trials = 1'000'000;
    config.threads = options.threads;
    const RatioReport report = EvaluateFamily(config, family);
    double worst_exact = 0;
    double worst_mc = 0;
    for (const InstanceRecord& r : report.records) {
      const double exact = ToDouble(r.opt) / *r.expected_gain;
      worst_exact = std::max(worst_exact, exact);
      if (r.monte_carlo) {
        worst_mc = std::max(worst_mc, r.monte_carlo->ratio);
      }
      ++cells;
      if (r.z_score && std::abs(*r.z_score) <= 3) ++within;
    }
    check.Expect(worst_exact <= bound,
                 std::string(spec) + " exact ratio " + Fmt(worst_exact));
    check.Note(std::string(spec) + " worst exact " + Fmt(worst_exact) +
               ", worst MC " + Fmt(worst_mc));
  }
  check.Expect(within * 100 >= cells * 99,
               "only " + std::to_string(within) + "/" + std::to_string(cells) +
                   " cells with |z| <= 3");
  check.Note(std::to_string(within) + "/" + std::to_string(cells) +
             " cells with |z| <= 3");
  const std::size_t samples = 100'000;
  std::vector<double> draws;
  draws.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    SplitMix64 rng(DeriveSeed(options.seed, 808, i));
    draws.push_back(dist.Sample(UniformDouble(rng)));
  }
  const double ks = KolmogorovSmirnov(dist, std::move(draws));
  const double critical = KsCriticalValue1Percent(samples);
  check.Expect(ks <= critical, "KS " + Fmt(ks) + " > " + Fmt(critical));
  check.Note("KS " + Fmt(ks, 4) + " <= " + Fmt(critical, 4));
}

void GMonotone(const AcceptanceOptions&, Check& check) {
  const MonotoneCheck result =
      CheckGMonotone(SharedThresholdDistribution(1e-10), 10'000);
  check.Expect(result.increasing,
               "min difference " + Fmt(result.min_difference, 4));
  check.Note("min successive difference " + Fmt(result.min_difference, 4) +
             ", g(2/3)=" + Fmt(result.g_first) + ", g(1)=" + Fmt(result.g_last));
}

void OneBitAdvice(const AcceptanceOptions& options, Check& check) {
  SplitMix64 rng(StreamSeed(options, 10, 0));
  Rational worst = 1;
  for (int i = 0; i < 100'000; ++i) {
    const Instance instance =
        RandomInstanceSharedDenominator(rng, InstanceKind::kSimple, 1, 8, 200);
    const Rational opt = OptUnbounded(instance).value;
    const RunTrace trace = OneBitAlgorithm(instance, OneBitOracle(instance));
    check.Expect(trace.gain * 3 >= opt * 2 && trace.bits_read == 1,
                 "one bit on " + FormatInstanceText(instance));
    if (sgn(trace.gain) > 0) worst = std::max(worst, Rational(opt / trace.gain));
  }
  check.Note("random worst " + ToString(worst));
  ExperimentConfig config;
  config.algorithm = AlgorithmId::kOneBit;
  const RatioReport report =
      EvaluateFamily(config, Family("advice_lb:n=8,eps=1/100"));
  check.Expect(*report.worst_exact_ratio <= Ratio::Finite(Rational(3, 2)),
               "advice_lb(8) " + report.worst_exact_ratio->ToString());
  check.Note("advice_lb(8) worst " + report.worst_exact_ratio->ToString());
  const ChainFamily lb = Family("advice_lb:n=5,eps=1/100");
  const AdviceMinimaxResult one = DetMinimaxWithAdvice(lb, 1);
  check.Expect(one.ratio >= Ratio::Finite(Rational(150, 103)),
               "b=1 ratio " + one.ratio.ToString());
  const AdviceMinimaxResult two = DetMinimaxWithAdvice(lb, 2);
  check.Expect(two.ratio == Ratio::Finite(1), "b=2 ratio " + two.ratio.ToString());
  check.Note("b=1 " + one.ratio.ToString() + " (" + Fmt(one.ratio.ToDouble()) +
             ") >= 150/103, b=2 " + two.ratio.ToString());
}

void MixtureBounds(const AcceptanceOptions&, Check& check) {
  const ChainFamily det2 = Family("det2:eps=1/1000000");
  std::vector<Instance> instances = det2.Instances();
  std::vector<std::string> labels{det2.Label(0), det2.Label(1), "I_3"};
  instances.push_back(Instance::Simple({Rational(6, 10)}));
  const ChainFamily family = ChainFamily::FromInstances(instances, labels);
  const std::vector<Rational> opts = FamilyOpts(family);
  const std::pair<Rational, Rational> cases[] = {
      {Rational(3, 4), Rational(24, 13)},
      {Rational(8, 11), Rational(11, 6)},
  };
  for (const auto& [p, bound] : cases) {
    Rational worst = 0;
    for (std::size_t i = 0; i < family.instance_count(); ++i) {
      Rational gain =
          MixtureExpectedGain(family.InstanceAt(family.terminals()[i]), p);
      check.Expect(sgn(gain) > 0, "zero expected gain");
      if (sgn(gain) > 0) worst = std::max(worst, Rational(opts[i] / gain));
    }
    check.Expect(ToDouble(worst) <= ToDouble(bound) + 1e-9,
                 "p=" + ToString(p) + " worst " + ToString(worst));
    check.Note("p=" + ToString(p) + " worst " + ToString(worst) + " <= " +
               ToString(bound));
  }
  const Rational p(8, 11);
  const Rational greedy = MixtureGreedyBranchBound(p);
  const Rational wait = MixtureWaitBranchBound(p);
  check.Expect(greedy == wait && greedy == Rational(11, 6),
               "branch bounds " + ToString(greedy) + " vs " + ToString(wait));
  check.Note("branch bounds at 8/11: " + ToString(greedy) + " = " +
             ToString(wait));
}

void DistinctDecisionsCheck(const AcceptanceOptions&, Check& check) {
  for (int m : {4, 16, 64}) {
    const DistinctDecisions result =
        DistinctFirstDecisions(Family("exact_lb:m=" + std::to_string(m)));
    const int bits = CeilLog2(static_cast<std::uint64_t>(m) + 1);
    check.Expect(result.distinct == m + 1,
                 "m=" + std::to_string(m) + " distinct " +
                     std::to_string(result.distinct));
    check.Expect(result.advice_bits_lower_bound == bits,
                 "m=" + std::to_string(m) + " bits");
    check.Note("m=" + std::to_string(m) + ": " +
               std::to_string(result.distinct) + " decisions, >= " +
               std::to_string(result.advice_bits_lower_bound) + " bits");
  }
}

void GeneralValues(const AcceptanceOptions&, Check& check) {
  for (int k : {3, 5, 8}) {
    const DetMinimaxResult result =
        DetMinimax(Family("general_values:k=" + std::to_string(k)));
    const Rational expected = MakeRational(std::int64_t{1} << (k - 1));
    check.Expect(result.ratio == Ratio::Finite(expected),
                 "k=" + std::to_string(k) + " ratio " + result.ratio.ToString());
    check.Note("k=" + std::to_string(k) + " -> " + result.ratio.ToString());
  }
}

void EpsPipeline(const AcceptanceOptions& options, Check& check) {
  int runs = 0;
  for (const Rational& eps :
       {Rational(1, 2), Rational(1, 5), Rational(1, 10)}) {
    for (InstanceKind kind : {InstanceKind::kGeneral, InstanceKind::kSimple}) {
      SplitMix64 rng(StreamSeed(options, 14, static_cast<int>(kind)));
      for (int i = 0; i < 200; ++i) {
        const Instance instance =
            RandomInstanceTwoDenominators(rng, kind, 0, 40, 50);
        const Rational opt = OptUnbounded(instance).value;
        const RunTrace trace = EpsAdviceAlgorithm(
            instance, eps, EpsAdviceOracle(instance, eps));
        check.Expect(trace.gain >= (1 - eps) * opt,
                     "eps=" + ToString(eps) + " gain " + ToString(trace.gain) +
                         " opt " + ToString(opt));
        check.Expect(trace.bits_read <= AdviceBitBound(instance.size(), eps),
                     "eps=" + ToString(eps) + " bits " +
                         std::to_string(trace.bits_read));
        ++runs;
      }
    }
  }
  check.Note(std::to_string(runs) + " runs over eps in {1/2,1/5,1/10}");
}

using CriterionFn = void (*)(const AcceptanceOptions&, Check&);

struct CriterionEntry {
  const char* name;
  CriterionFn run;
};

constexpr CriterionEntry kCriteria[kCriterionCount] = {
    {"oracle_equivalence", OracleEquivalence},
    {"first_item_fill_bounds", FirstItemBounds},
    {"randomized_two_instance_bound", RandomizedTwoInstances},
    {"chain_equalization", Equalization},
    {"prefix_strategy_equal_ratios", PrefixStrategy},
    {"probability_shift", ProbabilityShift},
    {"threshold_constants", Constants},
    {"threshold_strategy", ThresholdBehavior},
    {"g_monotone", GMonotone},
    {"one_bit_advice", OneBitAdvice},
    {"mixture_bounds", MixtureBounds},
    {"distinct_first_decisions", DistinctDecisionsCheck},
    {"general_values_unbounded", GeneralValues},
    {"eps_advice_pipeline", EpsPipeline},
};

}  // namespace

std::string CriterionName(int id) {
  Require(id >= 1 && id <= kCriterionCount, "criterion out of range");
  return kCriteria[id - 1].name;
}

CriterionResult RunCriterion(int id, const AcceptanceOptions& options) {
  CriterionResult result;
  result.id = id;
  result.name = CriterionName(id);
  const auto start = std::chrono::steady_clock::now();
  Check check;
  try {
    kCriteria[id - 1].run(options, check);
    result.passed = check.passed();
    result.detail = check.detail();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("error: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

std::vector<CriterionResult> RunAcceptance(const AcceptanceOptions& options) {
  std::vector<int> ids = options.only;
  if (ids.empty()) {
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  }
  std::vector<CriterionResult> results;
  for (int id : ids) {
    results.push_back(RunCriterion(id, options));
    if (options.on_result) options.on_result(results.back());
  }
  return results;
}

std::string FormatCriterionLine(const CriterionResult& result) {
  char head[96];
  std::snprintf(head, sizeof(head), "%s %2d %s", result.passed ? "PASS" : "FAIL",
                result.id, result.name.c_str());
  char tail[32];
  std::snprintf(tail, sizeof(tail), " (%.2f s)", result.seconds);
  return std::string(head) + ": " + result.detail + tail;
}

}  // namespace okp
