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

// Materialises a benchmark split on disk: per-sample PNGs plus the manifest.
//
//   <out>/manifest.jsonl
//   <out>/generation_report.json
//   <out>/samples/<id>_image.png   occluded image
//   <out>/samples/<id>_occ.png     occluder mask
//   <out>/samples/<id>_full.png    amodal target
//   <out>/samples/<id>_vis.png     visible target
//   <out>/samples/<id>_inv.png     invisible target

#ifndef OCCBENCH_HARNESS_GENERATE_HPP_
#define OCCBENCH_HARNESS_GENERATE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "occbench/harness/dataset.hpp"
#include "occbench/harness/manifest.hpp"
#include "occbench/io.hpp"
#include "occbench/occlusion.hpp"
#include "occbench/parallel.hpp"
#include "occbench/prompt.hpp"
#include "occbench/protocol.hpp"

namespace occbench::harness {

struct SplitResult {
  RunManifest manifest;
  GenerationReport report;
  std::vector<std::string> warnings;
};

inline SampleFiles sample_files(const std::string& id) {
  return {"samples/" + id + "_image.png", "samples/" + id + "_occ.png",
          "samples/" + id + "_full.png", "samples/" + id + "_vis.png",
          "samples/" + id + "_inv.png"};
}

inline void attach_prompts(ManifestEntry& e, const BinaryMask& full, const BinaryMask& occluder,
                           std::uint64_t master_seed) {
  auto prompts = make_prompts(full, prompt_stream_key(master_seed, e.source_id));
  e.point = prompts.point;
  e.box = prompts.box;
  e.point_in_occluder = occluder.get(prompts.point.point->x, prompts.point.point->y);
}

// Writes the sample's rasters under `out_dir` and returns its manifest entry.
inline ManifestEntry write_sample(const fs::path& out_dir, const OcclusionSample& s,
                                  const SourcePair& src, std::uint64_t master_seed) {
  ManifestEntry e;
  e.id = s.id;
  e.source_id = s.source_id;
  e.type = s.type;
  e.bin = s.bin.label;
  e.ratio = s.ratio;
  e.overlap_px = s.overlap_px;
  e.target_px = s.target_px;
  e.out_of_bin = s.out_of_bin;
  e.attempts_used = s.attempts_used;
  e.sample_seed = s.seed;
  e.width = s.full.width();
  e.height = s.full.height();
  e.files = sample_files(s.id);
  e.source_image = src.image_rel;
  e.source_mask = src.mask_rel;
  e.tool = s.tool;
  e.cutout = s.cutout;
  attach_prompts(e, s.full, s.occluder, master_seed);

  const auto targets = decompose(s.full, s.occluder);
  write_rgb(out_dir / e.files.image, s.image);
  write_mask(out_dir / e.files.occluder, s.occluder);
  write_mask(out_dir / e.files.full, targets.full);
  write_mask(out_dir / e.files.visible, targets.visible);
  write_mask(out_dir / e.files.invisible, targets.invisible);
  return e;
}

inline nlohmann::json report_to_json(const std::string& dataset, const GenerationReport& r,
                                     const std::vector<std::string>& warnings) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [key, c] : r.counts) {
    const auto name = std::string(to_string(key.first)) + "/" + std::string(to_string(key.second));
    counts[name] = {{"success", c.success}, {"skipped", c.skipped}, {"out_of_bin", c.out_of_bin}};
  }
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& s : r.skipped) {
    skipped.push_back({{"source_id", s.source_id},
                       {"occlusion_type", std::string(to_string(s.type))},
                       {"bin", std::string(to_string(s.bin))},
                       {"attempts_used", s.attempts_used},
                       {"reason", s.reason}});
  }
  return {{"dataset", dataset},
          {"counts", counts},
          {"skipped", skipped},
          {"ingestion_errors", r.ingestion_errors},
          {"warnings", warnings}};
}

inline SplitResult generate_split(const DatasetIngest& ds, const ToolLibrary& library,
                                  const GenerationConfig& config, std::uint64_t master_seed,
                                  const fs::path& out_dir) {
  fs::create_directories(out_dir / "samples");
  const auto n = ds.pairs.size();
  std::vector<std::vector<ManifestEntry>> entries(n);
  std::vector<std::vector<SkippedItem>> skipped(n);
  std::vector<std::string> errors(n);

  parallel_for(n, config.workers, [&](std::size_t i) {
    const auto& pair = ds.pairs[i];
    try {
      const auto src = load_source(pair);
      for (auto& o : generate_for_source(config, src, library, master_seed)) {
        if (const auto* s = std::get_if<OcclusionSample>(&o)) {
          entries[i].push_back(write_sample(out_dir, *s, pair, master_seed));
        } else {
          skipped[i].push_back(std::get<SkippedItem>(std::move(o)));
        }
      }
    } catch (const Error& e) {
      errors[i] = pair.id + ": " + e.what();
    }
  });

  SplitResult result;
  result.manifest.master_seed = master_seed;
  result.manifest.dataset = ds.dataset_id;
  result.warnings = ds.warnings;
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) result.report.ingestion_errors.push_back(errors[i]);
    for (auto& k : skipped[i]) tally(result.report, GenerationOutcome(std::move(k)));
    for (auto& e : entries[i]) {
      auto& c = result.report.counts[{e.type, e.bin}];
      ++c.success;
      if (e.out_of_bin) ++c.out_of_bin;
      result.manifest.entries.push_back(std::move(e));
    }
  }
  write_manifest(out_dir / "manifest.jsonl", result.manifest);
  write_file_atomic(out_dir / "generation_report.json",
                    report_to_json(ds.dataset_id, result.report, result.warnings).dump(2) + "\n");
  return result;
}

// Recomputes both prompts of every entry from its stored full mask.
inline void refresh_prompts(RunManifest& m, const fs::path& manifest_dir, std::uint64_t master_seed,
                            int workers = 1) {
  parallel_for(m.entries.size(), workers, [&](std::size_t i) {
    auto& e = m.entries[i];
    const auto full = read_mask(manifest_dir / e.files.full);
    const auto occ = read_mask(manifest_dir / e.files.occluder);
    attach_prompts(e, full, occ, master_seed);
  });
}

}  // namespace occbench::harness

#endif  // OCCBENCH_HARNESS_GENERATE_HPP_
