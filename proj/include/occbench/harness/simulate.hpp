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

// Writes oracle predictions in the same layout an external model would use.

#ifndef OCCBENCH_HARNESS_SIMULATE_HPP_
#define OCCBENCH_HARNESS_SIMULATE_HPP_

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "occbench/harness/evaluate.hpp"
#include "occbench/harness/manifest.hpp"
#include "occbench/io.hpp"
#include "occbench/oracle.hpp"
#include "occbench/parallel.hpp"

namespace occbench::harness {

struct SimulateOptions {
  std::vector<PromptKind> prompts{PromptKind::kPoint, PromptKind::kBox};
  int workers = 1;
};

inline std::uint64_t prediction_seed(std::uint64_t master_seed, const std::string& model,
                                     const std::string& sample_id, PromptKind prompt) {
  return StreamKey(master_seed).mix("predict").mix(model).mix(sample_id).mix(to_string(prompt)).value();
}

// Returns the number of prediction files written.
inline int simulate(const RunManifest& manifest, const fs::path& manifest_dir,
                    const fs::path& out_dir, const std::string& model, const ArchetypeSpec& spec,
                    const SimulateOptions& options = {}) {
  if (model.empty() || model.find("__") != std::string::npos || model.find('/') != std::string::npos) {
    throw InvalidInputError("invalid model id '" + model + "'");
  }
  fs::create_directories(out_dir);
  std::atomic<int> written{0};
  parallel_for(manifest.entries.size(), options.workers, [&](std::size_t i) {
    const auto& e = manifest.entries[i];
    const auto targets = load_targets(e, manifest_dir);
    for (auto kind : options.prompts) {
      const Prompt* prompt = e.prompt(kind);
      if (prompt == nullptr) continue;
      const auto pred =
          predict(spec, targets, *prompt, prediction_seed(manifest.master_seed, model, e.id, kind));
      write_mask(out_dir / prediction_name(e.id, model, kind), pred);
      ++written;
    }
  });
  return written;
}

}  // namespace occbench::harness

#endif  // OCCBENCH_HARNESS_SIMULATE_HPP_
