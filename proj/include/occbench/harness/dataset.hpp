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

// Source dataset and tool library ingestion.
//
// Dataset layout:   <dir>/images/<name>.<png|jpg|jpeg>
//                   <dir>/masks/<name>.png
// Tool library:     <dir>/<id>_rgb.png + <dir>/<id>_mask.png

#ifndef OCCBENCH_HARNESS_DATASET_HPP_
#define OCCBENCH_HARNESS_DATASET_HPP_

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "occbench/error.hpp"
#include "occbench/io.hpp"
#include "occbench/occlusion.hpp"

namespace occbench::harness {

struct SourcePair {
  std::string id;        // filename stem
  fs::path image;        // absolute or caller-relative path
  fs::path mask;
  std::string image_rel;  // path relative to the dataset root, for provenance
  std::string mask_rel;
};

struct DatasetIngest {
  std::string dataset_id;
  std::vector<SourcePair> pairs;   // sorted by id
  std::vector<std::string> warnings;
};

namespace detail {

// Regular image files of a directory keyed by stem; duplicate stems warn.
inline std::map<std::string, fs::path> index_by_stem(const fs::path& dir,
                                                     std::vector<std::string>& warnings) {
  std::map<std::string, fs::path> out;
  if (!fs::is_directory(dir)) return out;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && is_supported_image(e.path())) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    auto [it, inserted] = out.emplace(f.stem().string(), f);
    if (!inserted) warnings.push_back("duplicate stem ignored: " + f.string());
  }
  return out;
}

}  // namespace detail

inline std::string dataset_id_of(const fs::path& dir) {
  auto p = dir;
  if (!p.has_filename()) p = p.parent_path();
  return p.filename().string();
}

// Pairs images with masks by filename stem. Decoding is deferred to
// load_source(), so a corrupt file fails only its own item.
inline DatasetIngest ingest_dataset(const fs::path& dir) {
  DatasetIngest ds;
  ds.dataset_id = dataset_id_of(dir);
  auto images = detail::index_by_stem(dir / "images", ds.warnings);
  auto masks = detail::index_by_stem(dir / "masks", ds.warnings);
  for (const auto& [stem, img] : images) {
    auto it = masks.find(stem);
    if (it == masks.end()) {
      ds.warnings.push_back("image without mask: " + img.string());
      continue;
    }
    ds.pairs.push_back({stem, img, it->second,
                        "images/" + img.filename().string(),
                        "masks/" + it->second.filename().string()});
  }
  for (const auto& [stem, m] : masks) {
    if (!images.contains(stem)) ds.warnings.push_back("mask without image: " + m.string());
  }
  if (ds.pairs.empty()) {
    throw EmptyDatasetError("no image/mask pairs found under " + dir.string());
  }
  return ds;
}

inline SourceSample load_source(const SourcePair& pair) {
  SourceSample s;
  s.id = pair.id;
  s.image = read_rgb(pair.image);
  s.mask = read_mask(pair.mask);
  if (s.image.dims() != s.mask.dims()) {
    throw InvalidInputError("dimension mismatch between " + pair.image.string() + " and " +
                            pair.mask.string());
  }
  if (is_empty(s.mask)) throw EmptyMaskError("empty ground-truth mask: " + pair.mask.string());
  return s;
}

struct ToolLibraryLoad {
  ToolLibrary tools;  // sorted by id
  std::vector<std::string> errors;
};

inline ToolLibraryLoad load_tool_library(const fs::path& dir) {
  ToolLibraryLoad out;
  if (!fs::is_directory(dir)) throw IoError("tool library directory not found: " + dir.string());
  std::vector<std::string> ids;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    const std::string suffix = "_rgb.png";
    if (e.is_regular_file() && name.size() > suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      ids.push_back(name.substr(0, name.size() - suffix.size()));
    }
  }
  std::sort(ids.begin(), ids.end());
  for (const auto& id : ids) {
    try {
      auto rgb = read_rgb(dir / (id + "_rgb.png"));
      auto mask = read_mask(dir / (id + "_mask.png"));
      out.tools.push_back(ToolInstance::from_frame(rgb, mask, id));
    } catch (const Error& e) {
      out.errors.push_back(e.what());
    }
  }
  return out;
}

// Writes a source pair in the ingestion layout (images/<id>.png, masks/<id>.png).
inline void write_source(const fs::path& dataset_dir, const SourceSample& s) {
  write_rgb(dataset_dir / "images" / (s.id + ".png"), s.image);
  write_mask(dataset_dir / "masks" / (s.id + ".png"), s.mask);
}

inline void write_tool(const fs::path& dir, const ToolInstance& tool) {
  write_rgb(dir / (tool.source_id + "_rgb.png"), tool.rgb);
  write_mask(dir / (tool.source_id + "_mask.png"), tool.mask);
}

}  // namespace occbench::harness

#endif  // OCCBENCH_HARNESS_DATASET_HPP_
