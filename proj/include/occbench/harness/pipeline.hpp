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

// End-to-end run with oracle predictors:
//
//   <out>/<dataset>/manifest.jsonl, samples/, generation_report.json
//   <out>/<dataset>/predictions/<sample>__<model>__<prompt>.png
//   <out>/records.jsonl
//   <out>/aggregate.json
//   <out>/report.{csv,jsonl,md}

#ifndef OCCBENCH_HARNESS_PIPELINE_HPP_
#define OCCBENCH_HARNESS_PIPELINE_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "occbench/harness/aggregate.hpp"
#include "occbench/harness/config.hpp"
#include "occbench/harness/dataset.hpp"
#include "occbench/harness/evaluate.hpp"
#include "occbench/harness/generate.hpp"
#include "occbench/harness/report.hpp"
#include "occbench/harness/simulate.hpp"

namespace occbench::harness {

inline std::string report_file_name(ReportFormat f) {
  switch (f) {
    case ReportFormat::kCsv: return "report.csv";
    case ReportFormat::kJsonl: return "report.jsonl";
    case ReportFormat::kMarkdown: return "report.md";
  }
  return "report";
}

inline ToolLibrary load_tools_for(const RunConfig& c) {
  const bool needs_tools =
      std::find(c.types.begin(), c.types.end(), OcclusionType::kTool) != c.types.end();
  if (!needs_tools) return {};
  if (c.tools.empty()) throw InvalidInputError("tool occlusion requested but no tool library given");
  auto load = load_tool_library(c.tools);
  if (load.tools.empty()) throw InvalidInputError("no usable tools under " + c.tools.string());
  return std::move(load.tools);
}

inline GenerationConfig generation_config(const RunConfig& c) {
  GenerationConfig g;
  g.types = c.types;
  g.bins = c.bins;
  g.max_attempts = c.max_attempts;
  g.workers = c.workers;
  return g;
}

struct PipelineResult {
  std::vector<SplitResult> splits;
  EvalResult eval;
  AggregateTable table;
};

inline PipelineResult run_pipeline(const RunConfig& c, std::uint64_t seed) {
  if (c.datasets.empty()) throw InvalidInputError("no datasets configured");
  if (c.models.empty()) throw InvalidInputError("no models configured");
  std::set<std::string> model_ids;
  for (const auto& m : c.models) {
    if (!model_ids.insert(m.id).second) throw InvalidInputError("duplicate model id " + m.id);
  }

  const auto library = load_tools_for(c);
  const auto gen = generation_config(c);
  PipelineResult result;
  std::set<std::string> dataset_ids;
  for (const auto& dir : c.datasets) {
    const auto ds = ingest_dataset(dir);
    if (!dataset_ids.insert(ds.dataset_id).second) {
      throw InvalidInputError("duplicate dataset id " + ds.dataset_id);
    }
    const auto split_dir = c.out / ds.dataset_id;
    auto split = generate_split(ds, library, gen, seed, split_dir);
    for (const auto& m : c.models) {
      simulate(split.manifest, split_dir, split_dir / "predictions", m.id, m.archetype,
               {c.prompts, c.workers});
      EvalOptions opts{c.prompts, c.include_out_of_bin, c.workers};
      auto ev = evaluate(split.manifest, split_dir, split_dir / "predictions", m.id, opts);
      for (auto& r : ev.records) result.eval.records.push_back(std::move(r));
      for (auto& r : ev.missing) result.eval.missing.push_back(std::move(r));
      for (auto& r : ev.errors) result.eval.errors.push_back(std::move(r));
      result.eval.filtered_out_of_bin += ev.filtered_out_of_bin;
    }
    result.splits.push_back(std::move(split));
  }

  write_records(c.out / "records.jsonl", result.eval);
  result.table = aggregate(result.eval);
  write_table(c.out / "aggregate.json", result.table);
  for (auto f : c.formats) emit_report(result.table, f, c.out / report_file_name(f));
  return result;
}

}  // namespace occbench::harness

#endif  // OCCBENCH_HARNESS_PIPELINE_HPP_
