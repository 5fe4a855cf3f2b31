/* Copyright 2026 The occbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef OCCBENCH_HARNESS_AGGREGATE_HPP_
#define OCCBENCH_HARNESS_AGGREGATE_HPP_

#include <algorithm>
#include <compare>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "occbench/harness/evaluate.hpp"
#include "occbench/metrics.hpp"

namespace occbench::harness {

// Rows sort by these fields in declaration order; enum fields compare by
// their declaration order (none < tool < cutout, clean < low < medium < high,
// point < box, full < visible < invisible).
struct GroupKey {
  std::string dataset;
  std::string model;
  PromptKind prompt = PromptKind::kBox;
  OcclusionType type = OcclusionType::kNone;
  Severity bin = Severity::kClean;
  EvalMode mode = EvalMode::kFull;

  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
  friend bool operator==(const GroupKey&, const GroupKey&) = default;
};

struct AggregateRow {
  GroupKey key;
  int n = 0;
  std::optional<double> mean_dsc;
  std::optional<double> mean_hd95;
  std::optional<double> delta_pct;  // vs the matching clean group
  int missing = 0;
};

struct AggregateTable {
  std::vector<AggregateRow> rows;

  const AggregateRow* find(const GroupKey& k) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), k,
                               [](const AggregateRow& r, const GroupKey& key) { return r.key < key; });
    return it != rows.end() && it->key == k ? &*it : nullptr;
  }
};

inline GroupKey clean_baseline_key(GroupKey k) {
  k.type = OcclusionType::kNone;
  k.bin = Severity::kClean;
  return k;
}

inline AggregateTable aggregate(const EvalResult& result) {
  struct Acc {
    std::vector<std::pair<std::string, MetricPair>> values;
    int missing = 0;
  };
  std::map<GroupKey, Acc> groups;
  for (const auto& r : result.records) {
    groups[{r.dataset, r.model, r.prompt, r.type, r.bin, r.mode}].values.emplace_back(r.sample_id,
                                                                                     r.metrics);
  }
  for (const auto& m : result.missing) {
    for (auto mode : m.modes) ++groups[{m.dataset, m.model, m.prompt, m.type, m.bin, mode}].missing;
  }

  AggregateTable table;
  for (auto& [key, acc] : groups) {
    AggregateRow row{key, static_cast<int>(acc.values.size()), {}, {}, {}, acc.missing};
    if (!acc.values.empty()) {
      // Fixed summation order regardless of record order.
      std::sort(acc.values.begin(), acc.values.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      double dsc = 0.0, hd = 0.0;
      for (const auto& [id, m] : acc.values) {
        dsc += m.dsc;
        hd += m.hd95;
      }
      row.mean_dsc = dsc / static_cast<double>(acc.values.size());
      row.mean_hd95 = hd / static_cast<double>(acc.values.size());
    }
    table.rows.push_back(std::move(row));
  }

  for (auto& row : table.rows) {
    if (row.key.bin == Severity::kClean || !row.mean_dsc) continue;
    const auto* base = table.find(clean_baseline_key(row.key));
    if (base && base->mean_dsc && *base->mean_dsc > 0.0) {
      row.delta_pct = relative_degradation(*base->mean_dsc, *row.mean_dsc);
    }
  }
  return table;
}

// Full-precision persistence between the aggregate and report stages.
inline nlohmann::json table_to_json(const AggregateTable& t) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"dataset", r.key.dataset},
                    {"model", r.key.model},
                    {"prompt", std::string(to_string(r.key.prompt))},
                    {"occlusion_type", std::string(to_string(r.key.type))},
                    {"bin", std::string(to_string(r.key.bin))},
                    {"mode", std::string(to_string(r.key.mode))},
                    {"n", r.n},
                    {"mean_dsc", opt(r.mean_dsc)},
                    {"mean_hd95", opt(r.mean_hd95)},
                    {"delta_pct", opt(r.delta_pct)},
                    {"missing", r.missing}});
  }
  return {{"rows", rows}};
}

inline AggregateTable table_from_json(const nlohmann::json& j) {
  auto opt = [](const nlohmann::json& v) -> std::optional<double> {
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
  };
  AggregateTable t;
  for (const auto& r : j.at("rows")) {
    AggregateRow row;
    row.key = {r.at("dataset").get<std::string>(),
               r.at("model").get<std::string>(),
               parse_prompt_kind(r.at("prompt").get<std::string>()),
               parse_occlusion_type(r.at("occlusion_type").get<std::string>()),
               parse_severity(r.at("bin").get<std::string>()),
               parse_eval_mode(r.at("mode").get<std::string>())};
    row.n = r.at("n").get<int>();
    row.mean_dsc = opt(r.at("mean_dsc"));
    row.mean_hd95 = opt(r.at("mean_hd95"));
    row.delta_pct = opt(r.at("delta_pct"));
    row.missing = r.at("missing").get<int>();
    t.rows.push_back(std::move(row));
  }
  std::sort(t.rows.begin(), t.rows.end(),
            [](const AggregateRow& a, const AggregateRow& b) { return a.key < b.key; });
  return t;
}

inline AggregateTable read_table(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open table " + path.string());
  return table_from_json(nlohmann::json::parse(in));
}

inline void write_table(const fs::path& path, const AggregateTable& t) {
  write_file_atomic(path, table_to_json(t).dump(1) + "\n");
}

}  // namespace occbench::harness

#endif  // OCCBENCH_HARNESS_AGGREGATE_HPP_
