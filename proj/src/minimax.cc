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

#include "okp/minimax.h"

#include <algorithm>
#include <optional>
#include <set>

#include "okp/error.h"

namespace okp {

bool operator<(const DecisionKey& a, const DecisionKey& b) {
  if (a.node != b.node) return a.node < b.node;
  const int fill = cmp(a.fill, b.fill);
  if (fill != 0) return fill < 0;
  return a.gain < b.gain;
}

std::vector<Rational> FamilyOpts(const ChainFamily& family,
                                 const OracleOptions& options) {
  bool all_large = true;
  for (std::size_t u = 1; u < family.node_count(); ++u) {
    if (family.node(u).item->size() * 2 < 1) all_large = false;
  }
  std::vector<Rational> opts;
  opts.reserve(family.instance_count());
  if (!all_large) {
    for (int t : family.terminals()) {
      opts.push_back(OptUnbounded(family.InstanceAt(t), options).value);
    }
    return opts;
  }
  for (int t : family.terminals()) {
    Rational best = 0;
    for (int u = t; u != ChainFamily::kRoot; u = family.node(u).parent) {
      const Rational& solo = family.node(u).item->solo_gain();
      if (solo > best) best = solo;
    }
    opts.push_back(std::move(best));
  }
  return opts;
}

namespace {

[[noreturn]] void TooManyStates(std::size_t limit) {
  Fail(ErrorCode::kLimitExceeded,
       "minimax state space exceeds " + std::to_string(limit) + " states");
}

std::vector<Rational> OptsByNode(const ChainFamily& family,
                                 const OracleOptions& options) {
  const std::vector<Rational> opts = FamilyOpts(family, options);
  std::vector<Rational> by_node(family.node_count());
  for (std::size_t i = 0; i < opts.size(); ++i) {
    by_node[family.terminals()[i]] = opts[i];
  }
  return by_node;
}

class DetSolver {
 public:
  DetSolver(const ChainFamily& family, const MinimaxOptions& options)
      : family_(family),
        options_(options),
        opt_(OptsByNode(family, options.oracle)) {}

  // Worst ratio the adversary can force once the item of `u` is processed.
  Ratio Worst(int u, const Rational& fill, const Rational& gain) {
    const ChainFamily::Node& node = family_.node(u);
    std::optional<Ratio> worst;
    if (node.terminal) worst = Ratio::Of(opt_[u], gain);
    for (int c : node.children) {
      Ratio r = Best(c, fill, gain);
      if (!worst || r > *worst) worst = r;
    }
    if (!worst) {
      Fail(ErrorCode::kInternal, "family has a leaf that is not an instance");
    }
    return *worst;
  }

  std::map<DecisionKey, std::uint64_t>& choices() { return choice_; }
  std::size_t states() const { return best_.size(); }

 private:
  // Best ratio over the copies of the item at `c` given the state before it.
  Ratio Best(int c, const Rational& fill, const Rational& gain) {
    DecisionKey key{c, fill, gain};
    auto it = best_.find(key);
    if (it != best_.end()) return it->second;
    if (best_.size() >= options_.max_states) TooManyStates(options_.max_states);
    const Item& item = *family_.node(c).item;
    Rational remaining = 1 - fill;
    const std::uint64_t fit =
        item.size() <= remaining ? FloorDivU64(remaining, item.size()) : 0;
    std::optional<Ratio> best;
    std::uint64_t best_count = 0;
    Rational f = fill;
    Rational g = gain;
    for (std::uint64_t count = 0; count <= fit; ++count) {
      Ratio r = Worst(c, f, g);
      if (!best || r < *best) {
        best = r;
        best_count = count;
      }
      f += item.size();
      g += item.value();
    }
    choice_.emplace(key, best_count);
    best_.emplace(std::move(key), *best);
    return *best;
  }

  const ChainFamily& family_;
  const MinimaxOptions& options_;
  std::vector<Rational> opt_;
  std::map<DecisionKey, Ratio> best_;
  std::map<DecisionKey, std::uint64_t> choice_;
};

// A deterministic strategy summarized by its ratio on every instance.
using Outcome = std::vector<Ratio>;

bool Dominates(const Outcome& a, const Outcome& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void ParetoPrune(std::vector<Outcome>& outcomes) {
  std::vector<Outcome> kept;
  for (Outcome& candidate : outcomes) {
    bool dominated = false;
    for (const Outcome& k : kept) {
      if (Dominates(k, candidate)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    std::erase_if(kept, [&](const Outcome& k) { return Dominates(candidate, k); });
    kept.push_back(std::move(candidate));
  }
  outcomes = std::move(kept);
}

class OutcomeEnumerator {
 public:
  OutcomeEnumerator(const ChainFamily& family, const MinimaxOptions& options)
      : family_(family),
        options_(options),
        opt_(OptsByNode(family, options.oracle)) {
    for (std::size_t i = 0; i < family.terminals().size(); ++i) {
      position_[family.terminals()[i]] = i;
    }
  }

  // Pareto-optimal outcomes of the subtree below `u` once u is processed.
  std::vector<Outcome> After(int u, const Rational& fill,
                             const Rational& gain) {
    const ChainFamily::Node& node = family_.node(u);
    Outcome base(family_.instance_count(), Ratio::Finite(Rational(1)));
    if (node.terminal) base[position_.at(u)] = Ratio::Of(opt_[u], gain);
    std::vector<Outcome> result{base};
    for (int c : node.children) {
      const std::vector<Outcome>& options = Choices(c, fill, gain);
      std::vector<Outcome> combined;
      for (const Outcome& a : result) {
        for (const Outcome& b : options) {
          Outcome merged(a.size(), Ratio::Finite(Rational(1)));
          for (std::size_t i = 0; i < a.size(); ++i) {
            merged[i] = a[i] < b[i] ? b[i] : a[i];
          }
          combined.push_back(std::move(merged));
          if (combined.size() > options_.max_states) {
            TooManyStates(options_.max_states);
          }
        }
      }
      ParetoPrune(combined);
      result = std::move(combined);
    }
    return result;
  }

 private:
  const std::vector<Outcome>& Choices(int c, const Rational& fill,
                                      const Rational& gain) {
    DecisionKey key{c, fill, gain};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (memo_.size() >= options_.max_states) TooManyStates(options_.max_states);
    const Item& item = *family_.node(c).item;
    Rational remaining = 1 - fill;
    const std::uint64_t fit =
        item.size() <= remaining ? FloorDivU64(remaining, item.size()) : 0;
    std::vector<Outcome> all;
    Rational f = fill;
    Rational g = gain;
    for (std::uint64_t count = 0; count <= fit; ++count) {
      std::vector<Outcome> part = After(c, f, g);
      for (Outcome& o : part) all.push_back(std::move(o));
      f += item.size();
      g += item.value();
    }
    ParetoPrune(all);
    return memo_.emplace(std::move(key), std::move(all)).first->second;
  }

  const ChainFamily& family_;
  const MinimaxOptions& options_;
  std::vector<Rational> opt_;
  std::map<int, std::size_t> position_;
  std::map<DecisionKey, std::vector<Outcome>> memo_;
};

// Smallest set of at most `limit` masks whose union is `full`; returns the
// chosen mask indices or nullopt.
std::optional<std::vector<int>> CoverWith(const std::vector<std::uint32_t>& masks,
                                          std::uint32_t full, int limit) {
  // parent[state] = (previous state, mask index); states reached in BFS
  // layers, so the first time `full` appears uses the fewest masks.
  std::vector<std::int64_t> previous(std::size_t{full} + 1, -1);
  std::vector<int> via(std::size_t{full} + 1, -1);
  std::vector<std::uint32_t> frontier{0};
  previous[0] = 0;
  if (full == 0) return std::vector<int>{};
  for (int layer = 0; layer < limit && !frontier.empty(); ++layer) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t state : frontier) {
      for (std::size_t m = 0; m < masks.size(); ++m) {
        const std::uint32_t reached = state | masks[m];
        if (previous[reached] >= 0) continue;
        previous[reached] = state;
        via[reached] = static_cast<int>(m);
        if (reached == full) {
          std::vector<int> chosen;
          for (std::uint32_t s = full; s != 0;
               s = static_cast<std::uint32_t>(previous[s])) {
            chosen.push_back(via[s]);
          }
          std::reverse(chosen.begin(), chosen.end());
          return chosen;
        }
        next.push_back(reached);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

DetMinimaxResult DetMinimax(const ChainFamily& family,
                            const MinimaxOptions& options) {
  DetSolver solver(family, options);
  DetMinimaxResult result;
  result.ratio = solver.Worst(ChainFamily::kRoot, Rational(0), Rational(0));
  result.witness = std::move(solver.choices());
  result.states = solver.states();
  result.opts = FamilyOpts(family, options.oracle);
  Ratio replay_worst = Ratio::Finite(Rational(1));
  for (std::size_t i = 0; i < family.instance_count(); ++i) {
    const RunTrace trace = ReplayWitness(family, result.witness, i);
    result.instance_ratios.push_back(Ratio::Of(result.opts[i], trace.gain));
    if (result.instance_ratios.back() > replay_worst) {
      replay_worst = result.instance_ratios.back();
    }
  }
  if (!(replay_worst == result.ratio)) {
    Fail(ErrorCode::kInternal, "minimax witness replay disagrees: " +
                                   replay_worst.ToString() + " vs " +
                                   result.ratio.ToString());
  }
  return result;
}

RunTrace ReplayWitness(const ChainFamily& family,
                       const std::map<DecisionKey, std::uint64_t>& witness,
                       std::size_t index) {
  Require(index < family.instance_count(), "instance index out of range");
  std::vector<int> path;
  for (int u = family.terminals()[index]; u != ChainFamily::kRoot;
       u = family.node(u).parent) {
    path.push_back(u);
  }
  std::reverse(path.begin(), path.end());
  std::vector<std::uint64_t> decisions;
  Rational fill = 0;
  Rational gain = 0;
  for (int u : path) {
    auto it = witness.find(DecisionKey{u, fill, gain});
    if (it == witness.end()) {
      Fail(ErrorCode::kInternal, "witness has no decision for a reached state");
    }
    const Item& item = *family.node(u).item;
    fill += item.size() * BigInt(it->second);
    gain += item.value() * BigInt(it->second);
    decisions.push_back(it->second);
  }
  return MakeTrace(family.InstanceAt(family.terminals()[index]),
                   std::move(decisions));
}

AdviceMinimaxResult DetMinimaxWithAdvice(const ChainFamily& family,
                                         int advice_bits,
                                         const MinimaxOptions& options) {
  Require(advice_bits >= 0 && advice_bits <= 16, "advice bits must be in 0..16");
  const std::size_t instances = family.instance_count();
  if (instances > 20) {
    Fail(ErrorCode::kLimitExceeded,
         "advice minimax supports at most 20 instances");
  }
  OutcomeEnumerator enumerator(family, options);
  const std::vector<Outcome> outcomes =
      enumerator.After(ChainFamily::kRoot, Rational(0), Rational(0));

  std::vector<Ratio> thresholds;
  for (const Outcome& o : outcomes) {
    thresholds.insert(thresholds.end(), o.begin(), o.end());
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  const std::uint32_t full =
      instances == 0 ? 0 : (std::uint32_t{1} << instances) - 1;
  const int limit = 1 << advice_bits;
  auto attempt = [&](const Ratio& t) {
    std::vector<std::uint32_t> masks;
    for (const Outcome& o : outcomes) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < instances; ++i) {
        if (o[i] <= t) mask |= std::uint32_t{1} << i;
      }
      masks.push_back(mask);
    }
    return CoverWith(masks, full, limit);
  };

  // Feasibility is monotone in the threshold; the largest threshold always
  // succeeds with any single strategy.
  std::size_t lo = 0;
  std::size_t hi = thresholds.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (attempt(thresholds[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const std::vector<int> chosen = *attempt(thresholds[lo]);

  AdviceMinimaxResult result;
  result.advice_bits = advice_bits;
  result.outcome_vectors = outcomes.size();
  for (int index : chosen) result.strategies.push_back(outcomes[index]);
  result.ratio = Ratio::Finite(Rational(1));
  for (std::size_t i = 0; i < instances; ++i) {
    int best = 0;
    for (std::size_t s = 1; s < result.strategies.size(); ++s) {
      if (result.strategies[s][i] < result.strategies[best][i]) {
        best = static_cast<int>(s);
      }
    }
    result.assignment.push_back(best);
    result.instance_ratios.push_back(result.strategies[best][i]);
    if (result.instance_ratios.back() > result.ratio) {
      result.ratio = result.instance_ratios.back();
    }
  }
  return result;
}

DistinctDecisions DistinctFirstDecisions(const ChainFamily& family,
                                         const OracleOptions& options) {
  DistinctDecisions result;
  std::set<int> distinct;
  for (int t : family.terminals()) {
    const Instance instance = family.InstanceAt(t);
    Require(!instance.empty(), "empty family instance");
    const Item& first = instance.item(0);
    std::vector<Item> rest(instance.items().begin() + 1, instance.items().end());
    const Instance others = Instance::Create(std::move(rest), instance.kind());
    const CapacityProfile profile =
        CapacityProfile::Compute(others, Rational(1), options);
    const Rational opt = OptUnbounded(instance, options).value;
    std::vector<int> optimal;
    for (std::uint64_t j = 0; j <= first.max_copies(); ++j) {
      Rational used = first.size() * BigInt(j);
      Rational value = first.value() * BigInt(j) + profile.ValueAt(1 - used);
      if (value == opt) optimal.push_back(static_cast<int>(j));
    }
    const int required = optimal.size() == 1 ? optimal[0] : -1;
    result.required.push_back(required);
    result.optimal.push_back(std::move(optimal));
    if (required >= 0) distinct.insert(required);
    ++result.instances;
  }
  for (const std::vector<int>& choices : result.optimal) {
    const bool covered =
        std::any_of(choices.begin(), choices.end(),
                    [&](int j) { return distinct.count(j) > 0; });
    if (!covered && !choices.empty()) distinct.insert(choices.front());
  }
  result.distinct = static_cast<int>(distinct.size());
  int bits = 0;
  while ((1 << bits) < result.distinct) ++bits;
  result.advice_bits_lower_bound = bits;
  return result;
}

}  // namespace okp
