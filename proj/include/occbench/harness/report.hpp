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

// Report rendering. Output is a pure function of the table: DSC at 3
// decimals, HD95 at 2, relative degradation at 1; absent values are empty
// (CSV), null (JSONL) or "--" (markdown).

#ifndef OCCBENCH_HARNESS_REPORT_HPP_
#define OCCBENCH_HARNESS_REPORT_HPP_

#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "json.hpp"
#include "occbench/error.hpp"
#include "occbench/harness/aggregate.hpp"
#include "occbench/io.hpp"

namespace occbench::harness {

enum class ReportFormat { kCsv, kJsonl, kMarkdown };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "jsonl") return ReportFormat::kJsonl;
  if (s == "markdown" || s == "md") return ReportFormat::kMarkdown;
  throw InvalidInputError("unknown report format: " + std::string(s));
}

inline constexpr std::string_view kCsvHeader =
    "dataset,model,prompt,occlusion_type,bin,mode,n,mean_dsc,mean_hd95,delta_pct,missing";

inline std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  // Normalise negative zero.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

inline std::string fixed(const std::optional<double>& v, int decimals, std::string_view absent) {
  return v ? fixed(*v, decimals) : std::string(absent);
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string render_csv(const AggregateTable& t) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : t.rows) {
    out += csv_field(r.key.dataset) + ',' + csv_field(r.key.model) + ',' +
           std::string(to_string(r.key.prompt)) + ',' + std::string(to_string(r.key.type)) + ',' +
           std::string(to_string(r.key.bin)) + ',' + std::string(to_string(r.key.mode)) + ',' +
           std::to_string(r.n) + ',' + fixed(r.mean_dsc, 3, "") + ',' +
           fixed(r.mean_hd95, 2, "") + ',' + fixed(r.delta_pct, 1, "") + ',' +
           std::to_string(r.missing) + '\n';
  }
  return out;
}

inline std::string render_jsonl(const AggregateTable& t) {
  auto rounded = [](const std::optional<double>& v, int decimals) -> nlohmann::json {
    if (!v) return nullptr;
    return std::stod(fixed(*v, decimals));
  };
  std::string out;
  for (const auto& r : t.rows) {
    nlohmann::json j = {{"dataset", r.key.dataset},
                        {"model", r.key.model},
                        {"prompt", std::string(to_string(r.key.prompt))},
                        {"occlusion_type", std::string(to_string(r.key.type))},
                        {"bin", std::string(to_string(r.key.bin))},
                        {"mode", std::string(to_string(r.key.mode))},
                        {"n", r.n},
                        {"mean_dsc", rounded(r.mean_dsc, 3)},
                        {"mean_hd95", rounded(r.mean_hd95, 2)},
                        {"delta_pct", rounded(r.delta_pct, 1)},
                        {"missing", r.missing}};
    out += j.dump() + "\n";
  }
  return out;
}

// One block per dataset; inside it one table per (occlusion type, prompt,
// mode) with models as rows and Clean/Low/Medium/High DSC plus the
// clean-to-high degradation as columns.
inline std::string render_markdown(const AggregateTable& t) {
  std::string out =
      "# Occlusion robustness report\n\n"
      "DSC: mean Dice (3 d.p.). HD95: mean 95th-percentile boundary Hausdorff distance in "
      "pixels; a prediction or target with no pixels scores the image diagonal. "
      "Delta%: (clean - high) / clean x 100. \"--\" marks undefined cells.\n";

  std::set<std::string> datasets;
  for (const auto& r : t.rows) datasets.insert(r.key.dataset);

  for (const auto& ds : datasets) {
    out += "\n## " + ds + "\n";
    std::set<std::string> models;
    std::set<std::tuple<OcclusionType, PromptKind, EvalMode>> blocks;
    for (const auto& r : t.rows) {
      if (r.key.dataset != ds) continue;
      models.insert(r.key.model);
      if (r.key.type != OcclusionType::kNone) blocks.insert({r.key.type, r.key.prompt, r.key.mode});
    }
    if (blocks.empty()) {
      for (const auto& r : t.rows) {
        if (r.key.dataset == ds) blocks.insert({OcclusionType::kNone, r.key.prompt, r.key.mode});
      }
    }
    for (const auto& [type, prompt, mode] : blocks) {
      out += "\n### " + std::string(to_string(mode)) + " DSC, " + std::string(to_string(type)) +
             " occlusion, " + std::string(to_string(prompt)) + " prompts\n\n";
      out += "| Model | Clean | Low | Medium | High | Delta% |\n";
      out += "|---|---|---|---|---|---|\n";
      for (const auto& model : models) {
        auto cell = [&](OcclusionType ty, Severity bin) -> const AggregateRow* {
          return t.find({ds, model, prompt, ty, bin, mode});
        };
        auto dsc = [&](const AggregateRow* r) { return r ? fixed(r->mean_dsc, 3, "--") : "--"; };
        out += "| " + model + " | " + dsc(cell(OcclusionType::kNone, Severity::kClean));
        for (auto bin : {Severity::kLow, Severity::kMedium, Severity::kHigh}) {
          out += " | " + (type == OcclusionType::kNone ? std::string("--") : dsc(cell(type, bin)));
        }
        const auto* high = type == OcclusionType::kNone ? nullptr : cell(type, Severity::kHigh);
        out += " | " + (high ? fixed(high->delta_pct, 1, "--") : std::string("--")) + " |\n";
      }
    }
  }
  return out;
}

inline std::string render_report(const AggregateTable& t, ReportFormat f) {
  switch (f) {
    case ReportFormat::kCsv: return render_csv(t);
    case ReportFormat::kJsonl: return render_jsonl(t);
    case ReportFormat::kMarkdown: return render_markdown(t);
  }
  return {};
}

inline void emit_report(const AggregateTable& t, ReportFormat f, const fs::path& path) {
  write_file_atomic(path, render_report(t, f));
}

}  // namespace occbench::harness

#endif  // OCCBENCH_HARNESS_REPORT_HPP_
