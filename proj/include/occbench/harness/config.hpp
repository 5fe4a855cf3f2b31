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

// Run configuration, stored as JSON:
//
//   {
//     "datasets": ["data/CVC-300"],
//     "tools": "data/tools",
//     "types": ["tool", "cutout"],
//     "bins": ["low", "medium", "high"],
//     "prompts": ["point", "box"],
//     "seed": 7,
//     "out": "runs/demo",
//     "workers": 4,
//     "max_attempts": 50,
//     "include_out_of_bin": false,
//     "models": [{"id": "aware", "archetype": "occluder_aware", "noise": 0}],
//     "formats": ["csv", "jsonl", "markdown"]
//   }
//
// Every key is optional. Relative paths resolve against the config file's
// directory. Unknown keys are rejected.

#ifndef OCCBENCH_HARNESS_CONFIG_HPP_
#define OCCBENCH_HARNESS_CONFIG_HPP_

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "occbench/error.hpp"
#include "occbench/harness/report.hpp"
#include "occbench/io.hpp"
#include "occbench/occlusion.hpp"
#include "occbench/oracle.hpp"
#include "occbench/prompt.hpp"

namespace occbench::harness {

struct ModelSpec {
  std::string id;
  ArchetypeSpec archetype;
};

struct RunConfig {
  std::vector<fs::path> datasets;
  fs::path tools;
  std::vector<OcclusionType> types{OcclusionType::kTool, OcclusionType::kCutout};
  std::vector<Severity> bins{Severity::kLow, Severity::kMedium, Severity::kHigh};
  std::vector<PromptKind> prompts{PromptKind::kPoint, PromptKind::kBox};
  std::optional<std::uint64_t> seed;
  fs::path out = "occbench_out";
  int workers = 1;
  int max_attempts = kDefaultMaxAttempts;
  bool include_out_of_bin = false;
  std::vector<ModelSpec> models;
  std::vector<ReportFormat> formats{ReportFormat::kCsv, ReportFormat::kJsonl,
                                    ReportFormat::kMarkdown};
};

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find(',', start), s.size());
    auto item = s.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

template <typename T, typename Parse>
std::vector<T> parse_each(const std::vector<std::string>& items, Parse parse) {
  std::vector<T> out;
  for (const auto& s : items) out.push_back(parse(s));
  return out;
}

inline std::vector<Severity> parse_bins(const std::vector<std::string>& items) {
  return parse_each<Severity>(items, [](const std::string& s) { return parse_severity(s); });
}
inline std::vector<OcclusionType> parse_types(const std::vector<std::string>& items) {
  return parse_each<OcclusionType>(items, [](const std::string& s) {
    const auto t = parse_occlusion_type(s);
    if (t == OcclusionType::kNone) throw InvalidInputError("occlusion type 'none' is implicit");
    return t;
  });
}
inline std::vector<PromptKind> parse_prompts(const std::vector<std::string>& items) {
  return parse_each<PromptKind>(items, [](const std::string& s) { return parse_prompt_kind(s); });
}

// "id=archetype[:noise]" or "archetype[:noise]" (id defaults to the archetype).
inline ModelSpec parse_model_spec(std::string_view s) {
  ModelSpec m;
  auto eq = s.find('=');
  std::string_view rest = s;
  if (eq != std::string_view::npos) {
    m.id = std::string(s.substr(0, eq));
    rest = s.substr(eq + 1);
  }
  auto colon = rest.find(':');
  m.archetype.kind = parse_archetype(rest.substr(0, colon));
  if (colon != std::string_view::npos) {
    m.archetype.noise = std::stoi(std::string(rest.substr(colon + 1)));
  }
  if (m.id.empty()) m.id = std::string(to_string(m.archetype.kind));
  return m;
}

// Parses a decimal u64 seed; rejects signs and trailing garbage.
inline std::uint64_t parse_seed(std::string_view s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw InvalidInputError("seed must be an unsigned 64-bit integer, got '" + std::string(s) + "'");
  }
  errno = 0;
  const auto v = std::strtoull(std::string(s).c_str(), nullptr, 10);
  if (errno == ERANGE) throw InvalidInputError("seed out of range: " + std::string(s));
  return v;
}

// An explicit seed wins, then $OCCBENCH_SEED, then the config's seed.
inline std::uint64_t resolve_seed(std::optional<std::uint64_t> flag,
                                  std::optional<std::uint64_t> config_seed) {
  if (flag) return *flag;
  if (const char* env = std::getenv("OCCBENCH_SEED"); env != nullptr && *env != '\0') {
    return parse_seed(env);
  }
  if (config_seed) return *config_seed;
  throw InvalidInputError("no seed given: pass --seed, set OCCBENCH_SEED or add \"seed\" to the config");
}

inline RunConfig config_from_json(const nlohmann::json& j, const fs::path& base_dir) {
  static const std::set<std::string> kKeys = {
      "datasets", "tools",   "types",        "bins",   "prompts", "seed",   "out",
      "workers",  "max_attempts", "include_out_of_bin", "models", "formats"};
  if (!j.is_object()) throw InvalidInputError("config must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!kKeys.contains(k)) throw InvalidInputError("unknown config key '" + k + "'");
  }
  auto resolve = [&](const std::string& p) {
    fs::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };
  auto strings = [&](const char* key) { return j.at(key).get<std::vector<std::string>>(); };

  RunConfig c;
  try {
    if (j.contains("datasets")) {
      for (const auto& d : strings("datasets")) c.datasets.push_back(resolve(d));
    }
    if (j.contains("tools")) c.tools = resolve(j.at("tools").get<std::string>());
    if (j.contains("types")) c.types = parse_types(strings("types"));
    if (j.contains("bins")) c.bins = parse_bins(strings("bins"));
    if (j.contains("prompts")) c.prompts = parse_prompts(strings("prompts"));
    if (j.contains("seed")) {
      const auto& s = j.at("seed");
      c.seed = s.is_string() ? parse_seed(s.get<std::string>()) : s.get<std::uint64_t>();
    }
    if (j.contains("out")) c.out = resolve(j.at("out").get<std::string>());
    if (j.contains("workers")) c.workers = j.at("workers").get<int>();
    if (j.contains("max_attempts")) c.max_attempts = j.at("max_attempts").get<int>();
    if (j.contains("include_out_of_bin")) c.include_out_of_bin = j.at("include_out_of_bin").get<bool>();
    if (j.contains("models")) {
      for (const auto& m : j.at("models")) {
        ModelSpec spec;
        spec.archetype.kind = parse_archetype(m.at("archetype").get<std::string>());
        spec.archetype.noise = m.value("noise", 0);
        spec.id = m.value("id", std::string(to_string(spec.archetype.kind)));
        c.models.push_back(std::move(spec));
      }
    }
    if (j.contains("formats")) {
      c.formats = parse_each<ReportFormat>(strings("formats"),
                                           [](const std::string& s) { return parse_report_format(s); });
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("config: ") + e.what());
  }
  if (c.workers < 1) throw InvalidInputError("config: workers must be >= 1");
  if (c.max_attempts < 1) throw InvalidInputError("config: max_attempts must be >= 1");
  return c;
}

inline RunConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(path.string() + ": " + e.what());
  }
  return config_from_json(j, path.parent_path());
}

}  // namespace occbench::harness

#endif  // OCCBENCH_HARNESS_CONFIG_HPP_
