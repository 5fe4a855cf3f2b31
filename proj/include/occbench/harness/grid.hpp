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

#ifndef OCCBENCH_HARNESS_GRID_HPP_
#define OCCBENCH_HARNESS_GRID_HPP_

#include <string>
#include <vector>

#include "occbench/error.hpp"
#include "occbench/occlusion.hpp"
#include "occbench/prompt.hpp"
#include "occbench/protocol.hpp"

namespace occbench::harness {

struct GridAxes {
  std::vector<std::string> datasets;
  std::vector<OcclusionType> types;
  std::vector<Severity> bins;  // including kClean when wanted
  std::vector<EvalMode> modes{EvalMode::kFull, EvalMode::kVisible, EvalMode::kInvisible};
  std::vector<PromptKind> prompts;
  std::vector<std::string> models;
};

struct GridCell {
  std::string dataset;
  OcclusionType type;
  Severity bin;
  EvalMode mode;
  PromptKind prompt;
  std::string model;
};

// Full cartesian product, dataset-major.
inline std::vector<GridCell> plan_grid(const GridAxes& axes) {
  if (axes.datasets.empty() || axes.types.empty() || axes.bins.empty() || axes.modes.empty() ||
      axes.prompts.empty() || axes.models.empty()) {
    throw InvalidInputError("plan_grid: every axis needs at least one value");
  }
  std::vector<GridCell> cells;
  cells.reserve(axes.datasets.size() * axes.types.size() * axes.bins.size() * axes.modes.size() *
                axes.prompts.size() * axes.models.size());
  for (const auto& d : axes.datasets)
    for (auto t : axes.types)
      for (auto b : axes.bins)
        for (auto m : axes.modes)
          for (auto p : axes.prompts)
            for (const auto& model : axes.models) cells.push_back({d, t, b, m, p, model});
  return cells;
}

}  // namespace occbench::harness

#endif  // OCCBENCH_HARNESS_GRID_HPP_
