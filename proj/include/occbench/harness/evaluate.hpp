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

// Scores prediction masks against a manifest. Predictions are flat PNG files
// named <sample_id>__<model_id>__<prompt_kind>.png.

#ifndef OCCBENCH_HARNESS_EVALUATE_HPP_
#define OCCBENCH_HARNESS_EVALUATE_HPP_

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "occbench/error.hpp"
#include "occbench/harness/manifest.hpp"
#include "occbench/io.hpp"
#include "occbench/metrics.hpp"
#include "occbench/parallel.hpp"
#include "occbench/protocol.hpp"

namespace occbench::harness {

struct EvalRecord {
  std::string dataset;
  std::string sample_id;
  std::string model;
  PromptKind prompt = PromptKind::kBox;
  EvalMode mode = EvalMode::kFull;
  OcclusionType type = OcclusionType::kNone;
  Severity bin = Severity::kClean;
  double ratio = 0.0;
  MetricPair metrics;
};

// A prediction file that should exist but does not. `modes` lists the
// evaluation modes it would have contributed to.
struct MissingPrediction {
  std::string dataset;
  std::string sample_id;
  std::string model;
  PromptKind prompt = PromptKind::kBox;
  OcclusionType type = OcclusionType::kNone;
  Severity bin = Severity::kClean;
  std::vector<EvalMode> modes;
};

struct EvalResult {
  std::vector<EvalRecord> records;
  std::vector<MissingPrediction> missing;
  std::vector<std::string> errors;
  int filtered_out_of_bin = 0;
};

struct EvalOptions {
  std::vector<PromptKind> prompts{PromptKind::kPoint, PromptKind::kBox};
  bool include_out_of_bin = false;
  int workers = 1;
};

inline std::string prediction_name(const std::string& sample_id, const std::string& model,
                                   PromptKind prompt) {
  return sample_id + "__" + model + "__" + std::string(to_string(prompt)) + ".png";
}

inline TargetMasks load_targets(const ManifestEntry& e, const fs::path& manifest_dir) {
  return decompose(read_mask(manifest_dir / e.files.full),
                   read_mask(manifest_dir / e.files.occluder));
}

inline EvalResult evaluate(const RunManifest& manifest, const fs::path& manifest_dir,
                           const fs::path& preds_dir, const std::string& model,
                           const EvalOptions& options = {}) {
  struct PerSample {
    std::vector<EvalRecord> records;
    std::vector<MissingPrediction> missing;
    std::vector<std::string> errors;
    bool filtered = false;
  };
  std::vector<PerSample> per(manifest.entries.size());

  parallel_for(manifest.entries.size(), options.workers, [&](std::size_t i) {
    const auto& e = manifest.entries[i];
    auto& out = per[i];
    if (e.out_of_bin && !options.include_out_of_bin) {
      out.filtered = true;
      return;
    }
    TargetMasks targets;
    try {
      targets = load_targets(e, manifest_dir);
    } catch (const Error& err) {
      out.errors.push_back(e.id + ": " + err.what());
      return;
    }
    std::vector<EvalMode> modes;
    for (auto m : kAllModes) {
      if (mode_defined(targets, m)) modes.push_back(m);
    }
    for (auto prompt : options.prompts) {
      if (e.prompt(prompt) == nullptr) continue;
      const auto path = preds_dir / prediction_name(e.id, model, prompt);
      if (!fs::exists(path)) {
        out.missing.push_back({manifest.dataset, e.id, model, prompt, e.type, e.bin, modes});
        continue;
      }
      BinaryMask pred;
      try {
        pred = read_mask(path);
      } catch (const Error& err) {
        out.errors.push_back(path.filename().string() + ": " + err.what());
        continue;
      }
      if (pred.dims() != targets.full.dims()) {
        out.errors.push_back(path.filename().string() + ": prediction is " +
                             std::to_string(pred.width()) + "x" + std::to_string(pred.height()) +
                             ", expected " + std::to_string(e.width) + "x" +
                             std::to_string(e.height));
        continue;
      }
      for (auto m : modes) {
        auto metrics = score_mode(pred, targets, m);
        out.records.push_back(
            {manifest.dataset, e.id, model, prompt, m, e.type, e.bin, e.ratio, *metrics});
      }
    }
  });

  EvalResult result;
  for (auto& p : per) {
    if (p.filtered) ++result.filtered_out_of_bin;
    for (auto& r : p.records) result.records.push_back(std::move(r));
    for (auto& m : p.missing) result.missing.push_back(std::move(m));
    for (auto& e : p.errors) result.errors.push_back(std::move(e));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Record files: JSON lines with a "status" of "ok", "missing" or "error".

inline nlohmann::json to_json(const EvalRecord& r) {
  return {{"status", "ok"},
          {"dataset", r.dataset},
          {"sample_id", r.sample_id},
          {"model", r.model},
          {"prompt", std::string(to_string(r.prompt))},
          {"mode", std::string(to_string(r.mode))},
          {"occlusion_type", std::string(to_string(r.type))},
          {"bin", std::string(to_string(r.bin))},
          {"ratio", r.ratio},
          {"dsc", r.metrics.dsc},
          {"hd95", r.metrics.hd95}};
}

inline nlohmann::json to_json(const MissingPrediction& m) {
  nlohmann::json modes = nlohmann::json::array();
  for (auto mode : m.modes) modes.push_back(std::string(to_string(mode)));
  return {{"status", "missing"},
          {"dataset", m.dataset},
          {"sample_id", m.sample_id},
          {"model", m.model},
          {"prompt", std::string(to_string(m.prompt))},
          {"occlusion_type", std::string(to_string(m.type))},
          {"bin", std::string(to_string(m.bin))},
          {"modes", modes}};
}

inline std::string serialize_records(const EvalResult& r) {
  std::string out;
  for (const auto& rec : r.records) out += to_json(rec).dump() + "\n";
  for (const auto& m : r.missing) out += to_json(m).dump() + "\n";
  for (const auto& e : r.errors) {
    out += nlohmann::json{{"status", "error"}, {"message", e}}.dump() + "\n";
  }
  return out;
}

inline void write_records(const fs::path& path, const EvalResult& r) {
  write_file_atomic(path, serialize_records(r));
}

// Appends the contents of a record file to `into`.
inline void read_records(const fs::path& path, EvalResult& into) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open records " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    const auto status = j.at("status").get<std::string>();
    if (status == "ok") {
      into.records.push_back({j.at("dataset").get<std::string>(),
                              j.at("sample_id").get<std::string>(),
                              j.at("model").get<std::string>(),
                              parse_prompt_kind(j.at("prompt").get<std::string>()),
                              parse_eval_mode(j.at("mode").get<std::string>()),
                              parse_occlusion_type(j.at("occlusion_type").get<std::string>()),
                              parse_severity(j.at("bin").get<std::string>()),
                              j.at("ratio").get<double>(),
                              {j.at("dsc").get<double>(), j.at("hd95").get<double>()}});
    } else if (status == "missing") {
      MissingPrediction m{j.at("dataset").get<std::string>(),
                          j.at("sample_id").get<std::string>(),
                          j.at("model").get<std::string>(),
                          parse_prompt_kind(j.at("prompt").get<std::string>()),
                          parse_occlusion_type(j.at("occlusion_type").get<std::string>()),
                          parse_severity(j.at("bin").get<std::string>()),
                          {}};
      for (const auto& mode : j.at("modes")) m.modes.push_back(parse_eval_mode(mode.get<std::string>()));
      into.missing.push_back(std::move(m));
    } else {
      into.errors.push_back(j.value("message", ""));
    }
  }
}

}  // namespace occbench::harness

#endif  // OCCBENCH_HARNESS_EVALUATE_HPP_
