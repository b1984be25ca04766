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

#include "okp/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "okp/error.h"

namespace okp {
namespace {

using Json = nlohmann::ordered_json;

// Everything a report renders to: scalar metadata plus one table.
struct Document {
  Json meta = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string table_key = "rows";
};

std::string Num(double x) {
  if (std::isinf(x)) return x > 0 ? "unbounded" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

Json NumJson(double x) {
  if (std::isfinite(x)) return x;
  return Num(x);
}

Json RatioJson(const Ratio& r) {
  if (r.unbounded()) return "unbounded";
  return r.ToString();
}

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string MetaText(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string Render(const Document& doc, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson: {
      Json out = doc.meta;
      Json rows = Json::array();
      for (const std::vector<std::string>& row : doc.rows) {
        Json entry = Json::object();
        for (std::size_t c = 0; c < doc.columns.size(); ++c) {
          entry[doc.columns[c]] = row[c];
        }
        rows.push_back(std::move(entry));
      }
      out[doc.table_key] = std::move(rows);
      return out.dump(2) + "\n";
    }
    case ReportFormat::kCsv: {
      std::string out;
      for (std::size_t c = 0; c < doc.columns.size(); ++c) {
        out += (c ? "," : "") + CsvField(doc.columns[c]);
      }
      out += "\n";
      for (const std::vector<std::string>& row : doc.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out += (c ? "," : "") + CsvField(row[c]);
        }
        out += "\n";
      }
      return out;
    }
    case ReportFormat::kText: {
      std::ostringstream out;
      std::size_t key_width = 0;
      for (auto it = doc.meta.begin(); it != doc.meta.end(); ++it) {
        key_width = std::max(key_width, it.key().size());
      }
      for (auto it = doc.meta.begin(); it != doc.meta.end(); ++it) {
        out << it.key() << std::string(key_width - it.key().size() + 2, ' ')
            << MetaText(it.value()) << "\n";
      }
      if (doc.columns.empty()) return out.str();
      std::vector<std::size_t> width(doc.columns.size());
      for (std::size_t c = 0; c < doc.columns.size(); ++c) {
        width[c] = doc.columns[c].size();
        for (const std::vector<std::string>& row : doc.rows) {
          width[c] = std::max(width[c], row[c].size());
        }
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c) text += "  ";
          text += cells[c];
          if (c + 1 < cells.size()) {
            text += std::string(width[c] - cells[c].size(), ' ');
          }
        }
        out << text << "\n";
      };
      out << "\n";
      line(doc.columns);
      std::vector<std::string> rule;
      for (std::size_t w : width) rule.push_back(std::string(w, '-'));
      line(rule);
      for (const std::vector<std::string>& row : doc.rows) line(row);
      return out.str();
    }
  }
  Fail(ErrorCode::kInternal, "unknown report format");
}

std::string RatioCell(const Ratio& r) {
  return r.unbounded() ? "unbounded" : r.ToString();
}

void AddRatioRows(const ChainFamily& family, const std::vector<Ratio>& ratios,
                  Document& doc) {
  doc.columns = {"instance", "ratio", "ratio_exact"};
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    doc.rows.push_back(
        {family.Label(i), Num(ratios[i].ToDouble()), RatioCell(ratios[i])});
  }
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "text") return ReportFormat::kText;
  if (name == "csv") return ReportFormat::kCsv;
  Fail(ErrorCode::kInvalidArgument,
       "unknown format '" + std::string(name) + "' (json, text, csv)");
}

std::string FormatRatioReport(const RatioReport& report, ReportFormat format) {
  Document doc;
  doc.meta["algorithm"] = report.algorithm;
  doc.meta["source"] = report.source;
  doc.meta["seed"] = report.seed;
  doc.meta["randomized"] = report.randomized;
  if (report.randomized) doc.meta["trials"] = report.trials;
  doc.meta["instances"] = report.records.size();
  doc.meta["worst_ratio"] = NumJson(report.worst_ratio);
  if (report.worst_exact_ratio) {
    doc.meta["worst_ratio_exact"] = RatioJson(*report.worst_exact_ratio);
  }
  doc.meta["worst_instance"] = report.worst_id;
  doc.table_key = "records";
  doc.columns = {"instance", "opt", "gain", "expected_gain", "ratio",
                 "ratio_exact"};
  if (report.randomized) {
    for (const char* c : {"mc_mean", "mc_stderr", "mc_ratio", "z"}) {
      doc.columns.push_back(c);
    }
  } else {
    for (const char* c : {"bits_read", "tape_hex", "decisions"}) {
      doc.columns.push_back(c);
    }
  }
  for (const InstanceRecord& r : report.records) {
    std::vector<std::string> row{
        r.id,
        ToString(r.opt),
        r.gain ? ToString(*r.gain) : "",
        r.expected_gain ? Num(*r.expected_gain) : "",
        Num(r.ratio),
        r.exact_ratio ? RatioCell(*r.exact_ratio) : ""};
    if (report.randomized) {
      if (r.monte_carlo) {
        row.push_back(Num(r.monte_carlo->mean_gain));
        row.push_back(Num(r.monte_carlo->standard_error));
        row.push_back(Num(r.monte_carlo->ratio));
      } else {
        row.insert(row.end(), 3, "");
      }
      row.push_back(r.z_score ? Num(*r.z_score) : "");
    } else {
      std::string decisions;
      for (std::size_t i = 0; i < r.decisions.size(); ++i) {
        decisions += (i ? " " : "") + std::to_string(r.decisions[i]);
      }
      row.push_back(std::to_string(r.bits_read));
      row.push_back(r.tape_hex);
      row.push_back(decisions);
    }
    doc.rows.push_back(std::move(row));
  }
  return Render(doc, format);
}

std::string FormatSolve(const Instance& instance, const OptResult& result,
                        ReportFormat format) {
  Document doc;
  doc.meta["kind"] = instance.kind() == InstanceKind::kSimple ? "simple"
                                                              : "general";
  doc.meta["items"] = instance.size();
  doc.meta["opt"] = ToString(result.value);
  doc.meta["opt_approx"] = NumJson(ToDouble(result.value));
  doc.meta["fill"] = ToString(result.witness.TotalSize(instance));
  doc.table_key = "witness";
  doc.columns = {"index", "size", "value", "copies"};
  for (std::size_t i = 0; i < instance.size(); ++i) {
    doc.rows.push_back({std::to_string(i + 1), ToString(instance.item(i).size()),
                        ToString(instance.item(i).value()),
                        std::to_string(result.witness.counts[i])});
  }
  return Render(doc, format);
}

std::string FormatFamily(const ChainFamily& family, ReportFormat format) {
  Document doc;
  doc.meta["family"] = FormatFamilySpec(family.params());
  doc.meta["kind"] = family.is_simple_family() ? "simple" : "general";
  doc.meta["instances"] = family.instance_count();
  doc.meta["nodes"] = family.node_count() - 1;
  doc.meta["chain"] = family.IsChain();
  doc.table_key = "instances";
  doc.columns = {"instance", "length", "items"};
  for (std::size_t i = 0; i < family.instance_count(); ++i) {
    const Instance instance = family.InstanceAt(family.terminals()[i]);
    std::string items;
    for (std::size_t j = 0; j < instance.size(); ++j) {
      const Item& item = instance.item(j);
      items += (j ? " " : "") + ToString(item.size());
      if (!family.is_simple_family()) items += ":" + ToString(item.value());
    }
    doc.rows.push_back(
        {family.Label(i), std::to_string(instance.size()), items});
  }
  return Render(doc, format);
}

std::string FormatConstants(const ThresholdDistribution& dist,
                            const MonotoneCheck& monotone,
                            ReportFormat format) {
  Document doc;
  doc.meta["tolerance"] = dist.tolerance();
  doc.meta["p_half"] = dist.p_half();
  doc.meta["inverse_p_half"] = 1.0 / dist.p_half();
  doc.meta["p_two_thirds"] = dist.p_two_thirds();
  doc.meta["j_integral"] = dist.j_integral();
  doc.meta["cdf_at_one"] = dist.Cdf(1.0);
  doc.meta["balance_residual"] = dist.BalanceResidual();
  doc.meta["mass_residual"] = dist.MassResidual();
  doc.meta["g_increasing"] = monotone.increasing;
  doc.meta["g_min_difference"] = monotone.min_difference;
  doc.meta["g_at_two_thirds"] = monotone.g_first;
  doc.meta["g_at_one"] = monotone.g_last;
  doc.table_key = "cdf";
  doc.columns = {"x", "cdf", "density"};
  for (double x : {0.5, 0.55, 0.6, 0.65, 2.0 / 3.0, 0.7, 0.75, 0.8, 0.85, 0.9,
                   0.95, 1.0}) {
    doc.rows.push_back({Num(x), Num(dist.Cdf(x)), Num(dist.Density(x))});
  }
  return Render(doc, format);
}

std::string FormatDetMinimax(const ChainFamily& family,
                             const DetMinimaxResult& result,
                             ReportFormat format) {
  Document doc;
  doc.meta["family"] = FormatFamilySpec(family.params());
  doc.meta["mode"] = "deterministic";
  doc.meta["ratio"] = RatioJson(result.ratio);
  doc.meta["ratio_approx"] = NumJson(result.ratio.ToDouble());
  doc.meta["states"] = result.states;
  AddRatioRows(family, result.instance_ratios, doc);
  doc.columns.push_back("opt");
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    doc.rows[i].push_back(ToString(result.opts[i]));
  }
  return Render(doc, format);
}

std::string FormatAdviceMinimax(const ChainFamily& family,
                                const AdviceMinimaxResult& result,
                                ReportFormat format) {
  Document doc;
  doc.meta["family"] = FormatFamilySpec(family.params());
  doc.meta["mode"] = "advice";
  doc.meta["advice_bits"] = result.advice_bits;
  doc.meta["ratio"] = RatioJson(result.ratio);
  doc.meta["ratio_approx"] = NumJson(result.ratio.ToDouble());
  doc.meta["strategies_used"] = result.strategies.size();
  doc.meta["outcome_vectors"] = result.outcome_vectors;
  AddRatioRows(family, result.instance_ratios, doc);
  doc.columns.push_back("advice");
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    doc.rows[i].push_back(std::to_string(result.assignment[i]));
  }
  return Render(doc, format);
}

std::string FormatRandomizedChain(const ChainFamily& family,
                                  const RandomizedChainResult& result,
                                  ReportFormat format) {
  Document doc;
  doc.meta["family"] = FormatFamilySpec(family.params());
  doc.meta["mode"] = "randomized";
  doc.meta["ratio"] = ToString(result.ratio);
  doc.meta["ratio_approx"] = ToDouble(result.ratio);
  AddRatioRows(family, result.instance_ratios, doc);
  doc.columns.push_back("probability");
  doc.columns.push_back("opt");
  for (std::size_t i = 0; i < doc.rows.size(); ++i) {
    doc.rows[i].push_back(ToString(result.probabilities[i]));
    doc.rows[i].push_back(ToString(result.opts[i]));
  }
  return Render(doc, format);
}

std::string FormatDistinctDecisions(const ChainFamily& family,
                                    const DistinctDecisions& result,
                                    ReportFormat format) {
  Document doc;
  doc.meta["family"] = FormatFamilySpec(family.params());
  doc.meta["mode"] = "distinct_first_decisions";
  doc.meta["instances"] = result.instances;
  doc.meta["distinct"] = result.distinct;
  doc.meta["advice_bits_lower_bound"] = result.advice_bits_lower_bound;
  doc.columns = {"instance", "first_item_copies", "optimal_copies"};
  for (std::size_t i = 0; i < result.required.size(); ++i) {
    std::string optimal;
    for (int j : result.optimal[i]) {
      if (!optimal.empty()) optimal += " ";
      optimal += std::to_string(j);
    }
    doc.rows.push_back({family.Label(i),
                        result.required[i] < 0
                            ? "ambiguous"
                            : std::to_string(result.required[i]),
                        optimal});
  }
  return Render(doc, format);
}

}  // namespace okp
