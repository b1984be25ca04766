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

// Adversarial instance families. Instances of a family share prefixes, so a
// family is stored as a trie whose marked nodes are the instances.

#ifndef OKP_FAMILY_H_
#define OKP_FAMILY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "okp/instance.h"

namespace okp {

enum class FamilyKind {
  kDet2,           // (1/2+eps), (1/2+eps, 1)
  kThree,          // prefixes of (1/2+eps, 3/4, 1)
  kPrefix,         // prefixes of (1/2+eps, 1/2+1/2n, ..., 1/2+n/2n)
  kAdviceLb,       // (1/3+eps, ..., 1/3+eps^{k-1}, 2/3-eps^{k-1}), k=2..n
  kExactLb,        // (1/m-1/m^3, 1-k/m+k/m^3), k=0..m
  kGeneralValues,  // prefixes of unit-size items with values 1, 2, 4, ...
  kCustom,         // built from explicit instances
};

std::string_view FamilyKindName(FamilyKind kind);

struct FamilyParams {
  FamilyKind kind = FamilyKind::kCustom;
  int n = 0;
  int m = 0;
  int k = 0;
  Rational eps = 0;
  // eps = 0 variants of the single-copy chains; only meaningful for the
  // randomized chain solver, which packs at most one item structurally.
  bool limit = false;
};

// Parses "kind:key=value,..." such as "det2:eps=1/100",
// "prefix:n=100,eps=1/1000000", "det2:limit", "exact_lb:m=4".
FamilyParams ParseFamilySpec(std::string_view spec);
std::string FormatFamilySpec(const FamilyParams& params);

class ChainFamily {
 public:
  struct Node {
    std::optional<Item> item;  // empty only for the root
    int parent = -1;
    int depth = 0;
    std::vector<int> children;
    bool terminal = false;
    std::string label;
  };

  static constexpr int kRoot = 0;

  explicit ChainFamily(InstanceKind kind);

  static ChainFamily Generate(const FamilyParams& params);
  // Each instance becomes a root-to-node path; shared prefixes are merged.
  static ChainFamily FromInstances(const std::vector<Instance>& instances,
                                   const std::vector<std::string>& labels);

  // Returns the existing child with an identical item, or a new one.
  int AddChild(int parent, const Item& item);
  void MarkTerminal(int node, std::string label);

  const FamilyParams& params() const { return params_; }
  InstanceKind kind() const { return kind_; }
  bool is_simple_family() const { return kind_ == InstanceKind::kSimple; }
  std::size_t node_count() const { return nodes_.size(); }
  const Node& node(int id) const { return nodes_[id]; }
  // Terminal nodes in canonical (marking) order.
  const std::vector<int>& terminals() const { return terminals_; }
  std::size_t instance_count() const { return terminals_.size(); }

  Instance InstanceAt(int node) const;
  std::vector<Instance> Instances() const;
  const std::string& Label(std::size_t instance) const {
    return nodes_[terminals_[instance]].label;
  }

  // True when no node has more than one child.
  bool IsChain() const;
  // Items along the single root-to-leaf path of a chain.
  std::vector<Item> MasterSequence() const;

 private:
  InstanceKind kind_;
  FamilyParams params_;
  std::vector<Node> nodes_;
  std::vector<int> terminals_;
};

// Family text: the instances one after another in the instance text format,
// each preceded by a "# <label>" comment line and separated by blank lines.
std::string FormatFamilyText(const ChainFamily& family);

}  // namespace okp

#endif  // OKP_FAMILY_H_
