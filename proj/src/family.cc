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

#include "okp/family.h"

#include <algorithm>
#include <charconv>

#include "okp/error.h"

namespace okp {
namespace {

struct KindEntry {
  FamilyKind kind;
  std::string_view name;
};

constexpr KindEntry kKinds[] = {
    {FamilyKind::kDet2, "det2"},
    {FamilyKind::kThree, "three"},
    {FamilyKind::kPrefix, "prefix"},
    {FamilyKind::kAdviceLb, "advice_lb"},
    {FamilyKind::kExactLb, "exact_lb"},
    {FamilyKind::kGeneralValues, "general_values"},
    {FamilyKind::kCustom, "custom"},
};

int ParseInt(std::string_view key, std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    Fail(ErrorCode::kParse, "family parameter " + std::string(key) +
                                " expects an integer, got '" +
                                std::string(text) + "'");
  }
  return value;
}

void RequireEps(const FamilyParams& params, const Rational& bound,
                const std::string& bound_text) {
  if (params.limit) {
    if (sgn(params.eps) != 0) {
      Fail(ErrorCode::kInvalidArgument, "limit mode fixes eps = 0");
    }
    return;
  }
  if (!(sgn(params.eps) > 0 && params.eps < bound)) {
    Fail(ErrorCode::kInvalidArgument,
         "eps must lie in (0, " + bound_text + ") for " +
             std::string(FamilyKindName(params.kind)) + ", got " +
             ToString(params.eps));
  }
}

Rational Pow(const Rational& base, int exponent) {
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

// Adds the chain of `sizes` (simple items) and marks every node from depth
// `first_terminal_depth` on.
void AddSimpleChain(ChainFamily& family, const std::vector<Rational>& sizes,
                    int first_label, int first_terminal_depth) {
  int node = ChainFamily::kRoot;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    node = family.AddChild(node, Item::Create(sizes[i], sizes[i]));
    const int depth = static_cast<int>(i) + 1;
    if (depth >= first_terminal_depth) {
      family.MarkTerminal(
          node, "I_" + std::to_string(first_label + depth - first_terminal_depth));
    }
  }
}

}  // namespace

std::string_view FamilyKindName(FamilyKind kind) {
  for (const KindEntry& entry : kKinds) {
    if (entry.kind == kind) return entry.name;
  }
  return "unknown";
}

FamilyParams ParseFamilySpec(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  FamilyParams params;
  bool found = false;
  for (const KindEntry& entry : kKinds) {
    if (entry.name == name && entry.kind != FamilyKind::kCustom) {
      params.kind = entry.kind;
      found = true;
    }
  }
  if (!found) {
    Fail(ErrorCode::kParse, "unknown family kind '" + std::string(name) + "'");
  }
  std::string_view rest =
      colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view field = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view()
                                           : rest.substr(comma + 1);
    if (field.empty()) continue;
    const std::size_t eq = field.find('=');
    const std::string_view key = field.substr(0, eq);
    const std::string_view value =
        eq == std::string_view::npos ? std::string_view() : field.substr(eq + 1);
    if (key == "limit") {
      params.limit = value.empty() || value == "1" || value == "true";
    } else if (eq == std::string_view::npos) {
      Fail(ErrorCode::kParse,
           "family parameter '" + std::string(field) + "' needs a value");
    } else if (key == "eps") {
      params.eps = ParseRational(value);
    } else if (key == "n") {
      params.n = ParseInt(key, value);
    } else if (key == "m") {
      params.m = ParseInt(key, value);
    } else if (key == "k") {
      params.k = ParseInt(key, value);
    } else {
      Fail(ErrorCode::kParse,
           "unknown family parameter '" + std::string(key) + "'");
    }
  }
  return params;
}

std::string FormatFamilySpec(const FamilyParams& params) {
  std::string out(FamilyKindName(params.kind));
  std::vector<std::string> fields;
  switch (params.kind) {
    case FamilyKind::kPrefix:
    case FamilyKind::kAdviceLb:
      fields.push_back("n=" + std::to_string(params.n));
      break;
    case FamilyKind::kExactLb:
      fields.push_back("m=" + std::to_string(params.m));
      break;
    case FamilyKind::kGeneralValues:
      fields.push_back("k=" + std::to_string(params.k));
      break;
    default:
      break;
  }
  if (params.kind == FamilyKind::kDet2 || params.kind == FamilyKind::kThree ||
      params.kind == FamilyKind::kPrefix ||
      params.kind == FamilyKind::kAdviceLb) {
    fields.push_back(params.limit ? "limit" : "eps=" + ToString(params.eps));
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += (i == 0 ? ":" : ",") + fields[i];
  }
  return out;
}

ChainFamily::ChainFamily(InstanceKind kind) : kind_(kind) {
  nodes_.emplace_back();
}

int ChainFamily::AddChild(int parent, const Item& item) {
  Require(parent >= 0 && parent < static_cast<int>(nodes_.size()),
          "parent node out of range");
  if (kind_ == InstanceKind::kSimple && item.size() != item.value()) {
    Fail(ErrorCode::kInvalidArgument, "simple family requires value=size");
  }
  for (int child : nodes_[parent].children) {
    if (*nodes_[child].item == item) return child;
  }
  Node node;
  node.item = item;
  node.parent = parent;
  node.depth = nodes_[parent].depth + 1;
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));
  nodes_[parent].children.push_back(id);
  return id;
}

void ChainFamily::MarkTerminal(int node, std::string label) {
  Require(node > kRoot && node < static_cast<int>(nodes_.size()),
          "terminal node out of range");
  if (nodes_[node].terminal) return;
  nodes_[node].terminal = true;
  nodes_[node].label = std::move(label);
  terminals_.push_back(node);
}

Instance ChainFamily::InstanceAt(int node) const {
  std::vector<Item> items;
  for (int u = node; u != kRoot; u = nodes_[u].parent) {
    items.push_back(*nodes_[u].item);
  }
  std::reverse(items.begin(), items.end());
  return Instance::Create(std::move(items), kind_);
}

std::vector<Instance> ChainFamily::Instances() const {
  std::vector<Instance> out;
  out.reserve(terminals_.size());
  for (int t : terminals_) out.push_back(InstanceAt(t));
  return out;
}

bool ChainFamily::IsChain() const {
  for (const Node& node : nodes_) {
    if (node.children.size() > 1) return false;
  }
  return true;
}

std::vector<Item> ChainFamily::MasterSequence() const {
  Require(IsChain(), "family is not a chain");
  std::vector<Item> items;
  for (int u = kRoot; !nodes_[u].children.empty();) {
    u = nodes_[u].children.front();
    items.push_back(*nodes_[u].item);
  }
  return items;
}

ChainFamily ChainFamily::Generate(const FamilyParams& params) {
  ChainFamily family(params.kind == FamilyKind::kGeneralValues
                         ? InstanceKind::kGeneral
                         : InstanceKind::kSimple);
  family.params_ = params;
  const Rational half(1, 2);
  switch (params.kind) {
    case FamilyKind::kDet2: {
      RequireEps(params, half, "1/2");
      Rational first = half + params.eps;
      AddSimpleChain(family, {first, Rational(1)}, 1, 1);
      break;
    }
    case FamilyKind::kThree: {
      RequireEps(params, Rational(1, 4), "1/4");
      Rational first = half + params.eps;
      AddSimpleChain(family, {first, Rational(3, 4), Rational(1)}, 1, 1);
      break;
    }
    case FamilyKind::kPrefix: {
      Require(params.n >= 1, "prefix family needs n >= 1");
      RequireEps(params, Rational(1, 2 * params.n), "1/(2n)");
      std::vector<Rational> sizes;
      sizes.reserve(params.n + 1);
      sizes.push_back(half + params.eps);
      for (int k = 1; k <= params.n; ++k) {
        sizes.push_back(half + MakeRational(k, 2 * params.n));
      }
      AddSimpleChain(family, sizes, 0, 1);
      break;
    }
    case FamilyKind::kAdviceLb: {
      Require(params.n >= 2, "advice_lb family needs n >= 2");
      Require(!params.limit, "advice_lb has no limit mode");
      RequireEps(params, half, "1/2");
      int spine = kRoot;
      for (int j = 1; j < params.n; ++j) {
        Rational power = Pow(params.eps, j);
        Rational spine_size = Rational(1, 3) + power;
        Rational leaf_size = Rational(2, 3) - power;
        spine = family.AddChild(spine, Item::Create(spine_size, spine_size));
        const int leaf =
            family.AddChild(spine, Item::Create(leaf_size, leaf_size));
        family.MarkTerminal(leaf, "I_" + std::to_string(j + 1));
      }
      break;
    }
    case FamilyKind::kExactLb: {
      Require(params.m >= 2, "exact_lb family needs m >= 2");
      const BigInt m(params.m);
      Rational first = Rational(1) / m - Rational(1) / (m * m * m);
      const int head = family.AddChild(kRoot, Item::Create(first, first));
      for (int k = 0; k <= params.m; ++k) {
        Rational second = 1 - Rational(k) / m + Rational(k) / (m * m * m);
        const int leaf = family.AddChild(head, Item::Create(second, second));
        family.MarkTerminal(leaf, "I_" + std::to_string(k));
      }
      break;
    }
    case FamilyKind::kGeneralValues: {
      Require(params.k >= 1 && params.k <= 62,
              "general_values family needs 1 <= k <= 62");
      int node = kRoot;
      for (int i = 0; i < params.k; ++i) {
        Rational value(BigInt(1) << i);
        node = family.AddChild(node, Item::Create(Rational(1), value));
        family.MarkTerminal(node, "I_" + std::to_string(i + 1));
      }
      break;
    }
    case FamilyKind::kCustom:
      Fail(ErrorCode::kInvalidArgument,
           "custom families are built from instances");
  }
  return family;
}

ChainFamily ChainFamily::FromInstances(const std::vector<Instance>& instances,
                                       const std::vector<std::string>& labels) {
  Require(!instances.empty(), "a family needs at least one instance");
  Require(labels.empty() || labels.size() == instances.size(),
          "one label per instance");
  ChainFamily family(instances.front().kind());
  family.params_.kind = FamilyKind::kCustom;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    Require(instances[i].kind() == family.kind_,
            "family instances must share a kind");
    Require(!instances[i].empty(), "family instances must be nonempty");
    int node = kRoot;
    for (const Item& item : instances[i].items()) {
      node = family.AddChild(node, item);
    }
    family.MarkTerminal(node,
                        labels.empty() ? "I_" + std::to_string(i + 1) : labels[i]);
  }
  return family;
}

std::string FormatFamilyText(const ChainFamily& family) {
  std::string out;
  for (std::size_t i = 0; i < family.instance_count(); ++i) {
    if (i > 0) out += "\n";
    out += "# " + family.Label(i) + "\n";
    out += FormatInstanceText(family.InstanceAt(family.terminals()[i]));
  }
  return out;
}

}  // namespace okp
