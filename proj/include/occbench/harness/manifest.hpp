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

// Run manifest: JSON lines, one generated sample per line. Every line carries
// the schema version, master seed and dataset id so a line is
// self-describing. File paths are relative to the manifest's directory.

#ifndef OCCBENCH_HARNESS_MANIFEST_HPP_
#define OCCBENCH_HARNESS_MANIFEST_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "occbench/error.hpp"
#include "occbench/io.hpp"
#include "occbench/occlusion.hpp"
#include "occbench/prompt.hpp"

namespace occbench::harness {

using json = nlohmann::json;

inline constexpr int kManifestSchemaVersion = 1;

struct SampleFiles {
  std::string image;
  std::string occluder;
  std::string full;
  std::string visible;
  std::string invisible;
};

struct ManifestEntry {
  std::string id;
  std::string source_id;
  OcclusionType type = OcclusionType::kNone;
  Severity bin = Severity::kClean;
  double ratio = 0.0;
  std::int64_t overlap_px = 0;
  std::int64_t target_px = 0;
  bool out_of_bin = false;
  int attempts_used = 0;
  std::uint64_t sample_seed = 0;
  int width = 0;
  int height = 0;
  SampleFiles files;
  std::optional<Prompt> point;
  std::optional<Prompt> box;
  bool point_in_occluder = false;
  // Provenance.
  std::string source_image;
  std::string source_mask;
  std::optional<ToolPlacement> tool;
  std::optional<CutoutParams> cutout;

  const Prompt* prompt(PromptKind k) const {
    const auto& p = k == PromptKind::kPoint ? point : box;
    return p ? &*p : nullptr;
  }
  Dims dims() const { return {width, height}; }
};

struct RunManifest {
  int schema_version = kManifestSchemaVersion;
  std::uint64_t master_seed = 0;
  std::string dataset;
  std::vector<ManifestEntry> entries;
};

inline json prompt_to_json(const Prompt& p) {
  if (p.kind == PromptKind::kPoint) {
    return {{"kind", "point"}, {"x", p.point->x}, {"y", p.point->y}, {"seed", p.source_seed}};
  }
  return {{"kind", "box"},          {"x_min", p.box->x_min}, {"y_min", p.box->y_min},
          {"x_max", p.box->x_max}, {"y_max", p.box->y_max}};
}

inline Prompt prompt_from_json(const json& j) {
  Prompt p;
  p.kind = parse_prompt_kind(j.at("kind").get<std::string>());
  if (p.kind == PromptKind::kPoint) {
    p.point = Point2D{j.at("x").get<int>(), j.at("y").get<int>()};
    p.source_seed = j.value("seed", std::uint64_t{0});
  } else {
    p.box = BoundingBox{j.at("x_min").get<int>(), j.at("y_min").get<int>(),
                        j.at("x_max").get<int>(), j.at("y_max").get<int>()};
  }
  return p;
}

inline json entry_to_json(const RunManifest& m, const ManifestEntry& e) {
  json j;
  j["schema_version"] = m.schema_version;
  j["master_seed"] = m.master_seed;
  j["dataset"] = m.dataset;
  j["id"] = e.id;
  j["source_id"] = e.source_id;
  j["occlusion_type"] = std::string(to_string(e.type));
  j["bin"] = std::string(to_string(e.bin));
  j["ratio"] = e.ratio;
  j["overlap_px"] = e.overlap_px;
  j["target_px"] = e.target_px;
  j["out_of_bin"] = e.out_of_bin;
  j["attempts_used"] = e.attempts_used;
  j["sample_seed"] = e.sample_seed;
  j["width"] = e.width;
  j["height"] = e.height;
  j["files"] = {{"image", e.files.image},     {"occluder", e.files.occluder},
                {"full", e.files.full},       {"visible", e.files.visible},
                {"invisible", e.files.invisible}};
  json prompts = json::object();
  if (e.point) {
    prompts["point"] = prompt_to_json(*e.point);
    prompts["point"]["in_occluder"] = e.point_in_occluder;
  }
  if (e.box) prompts["box"] = prompt_to_json(*e.box);
  j["prompts"] = prompts;

  json prov = {{"source_image", e.source_image}, {"source_mask", e.source_mask}};
  if (e.tool) {
    const auto& t = *e.tool;
    prov["tool"] = {{"id", t.tool_id},         {"index", t.tool_index},
                    {"scale", t.scale},        {"rotation_deg", t.rotation_deg},
                    {"x", t.position.x},       {"y", t.position.y},
                    {"dx", t.offset.x},        {"dy", t.offset.y}};
  }
  if (e.cutout) {
    const auto& c = *e.cutout;
    prov["cutout"] = {{"target_ratio", c.target_ratio}, {"multiplier", c.multiplier},
                      {"target_area", c.target_area},   {"overlap_goal", c.overlap_goal},
                      {"cutout_area", c.cutout_area},   {"aspect", c.aspect},
                      {"height", c.height},             {"width", c.width},
                      {"x", c.position.x},              {"y", c.position.y},
                      {"dx", c.offset.x},               {"dy", c.offset.y}};
  }
  j["provenance"] = prov;
  return j;
}

inline ManifestEntry entry_from_json(const json& j) {
  ManifestEntry e;
  e.id = j.at("id").get<std::string>();
  e.source_id = j.at("source_id").get<std::string>();
  e.type = parse_occlusion_type(j.at("occlusion_type").get<std::string>());
  e.bin = parse_severity(j.at("bin").get<std::string>());
  e.ratio = j.at("ratio").get<double>();
  e.overlap_px = j.at("overlap_px").get<std::int64_t>();
  e.target_px = j.at("target_px").get<std::int64_t>();
  e.out_of_bin = j.at("out_of_bin").get<bool>();
  e.attempts_used = j.at("attempts_used").get<int>();
  e.sample_seed = j.at("sample_seed").get<std::uint64_t>();
  e.width = j.at("width").get<int>();
  e.height = j.at("height").get<int>();
  const auto& f = j.at("files");
  e.files = {f.at("image").get<std::string>(), f.at("occluder").get<std::string>(),
             f.at("full").get<std::string>(), f.at("visible").get<std::string>(),
             f.at("invisible").get<std::string>()};
  const auto& prompts = j.at("prompts");
  if (prompts.contains("point")) {
    e.point = prompt_from_json(prompts["point"]);
    e.point_in_occluder = prompts["point"].value("in_occluder", false);
  }
  if (prompts.contains("box")) e.box = prompt_from_json(prompts["box"]);
  const auto& prov = j.at("provenance");
  e.source_image = prov.value("source_image", "");
  e.source_mask = prov.value("source_mask", "");
  if (prov.contains("tool")) {
    const auto& t = prov["tool"];
    ToolPlacement p;
    p.tool_id = t.at("id").get<std::string>();
    p.tool_index = t.at("index").get<std::size_t>();
    p.scale = t.at("scale").get<double>();
    p.rotation_deg = t.at("rotation_deg").get<double>();
    p.position = {t.at("x").get<int>(), t.at("y").get<int>()};
    p.offset = {t.at("dx").get<int>(), t.at("dy").get<int>()};
    e.tool = p;
  }
  if (prov.contains("cutout")) {
    const auto& c = prov["cutout"];
    CutoutParams p;
    p.target_ratio = c.at("target_ratio").get<double>();
    p.multiplier = c.at("multiplier").get<double>();
    p.target_area = c.at("target_area").get<double>();
    p.overlap_goal = c.at("overlap_goal").get<double>();
    p.cutout_area = c.at("cutout_area").get<double>();
    p.aspect = c.at("aspect").get<double>();
    p.height = c.at("height").get<double>();
    p.width = c.at("width").get<double>();
    p.position = {c.at("x").get<int>(), c.at("y").get<int>()};
    p.offset = {c.at("dx").get<int>(), c.at("dy").get<int>()};
    e.cutout = p;
  }
  return e;
}

inline std::string serialize_manifest(const RunManifest& m) {
  std::string out;
  for (const auto& e : m.entries) {
    out += entry_to_json(m, e).dump();
    out += '\n';
  }
  return out;
}

inline void write_manifest(const fs::path& path, const RunManifest& m) {
  write_file_atomic(path, serialize_manifest(m));
}

inline RunManifest read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  RunManifest m;
  std::string line;
  int lineno = 0;
  std::set<std::string> ids;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw InvalidInputError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    const int version = j.is_object() ? j.value("schema_version", -1) : -1;
    if (version != kManifestSchemaVersion) {
      throw InvalidInputError(path.string() + ": unsupported schema_version " +
                              std::to_string(version));
    }
    if (first) {
      m.master_seed = j.at("master_seed").get<std::uint64_t>();
      m.dataset = j.at("dataset").get<std::string>();
      first = false;
    }
    try {
      auto e = entry_from_json(j);
      if (!ids.insert(e.id).second) {
        throw InvalidInputError("duplicate sample id " + e.id);
      }
      m.entries.push_back(std::move(e));
    } catch (const json::exception& e) {
      throw InvalidInputError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return m;
}

}  // namespace occbench::harness

#endif  // OCCBENCH_HARNESS_MANIFEST_HPP_
