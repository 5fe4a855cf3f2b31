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

// Three-region evaluation targets.
//
//   full      = the amodal ground truth
//   visible   = full \ occluder
//   invisible = full ∩ occluder
//
// Full and visible modes score the raw prediction. Invisible mode scores only
// the part of the prediction inside the occluder footprint against the hidden
// target, so it measures what the model says about the covered region. It is
// undefined (absent) when nothing is hidden.

#ifndef OCCBENCH_PROTOCOL_HPP_
#define OCCBENCH_PROTOCOL_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "occbench/error.hpp"
#include "occbench/mask.hpp"
#include "occbench/metrics.hpp"

namespace occbench {

enum class EvalMode { kFull, kVisible, kInvisible };

inline constexpr std::array<EvalMode, 3> kAllModes{EvalMode::kFull, EvalMode::kVisible,
                                                   EvalMode::kInvisible};

inline std::string_view to_string(EvalMode m) {
  switch (m) {
    case EvalMode::kFull: return "full";
    case EvalMode::kVisible: return "visible";
    case EvalMode::kInvisible: return "invisible";
  }
  return "?";
}

inline EvalMode parse_eval_mode(std::string_view s) {
  if (s == "full") return EvalMode::kFull;
  if (s == "visible" || s == "visible_only") return EvalMode::kVisible;
  if (s == "invisible") return EvalMode::kInvisible;
  throw InvalidInputError("unknown eval mode: " + std::string(s));
}

struct TargetMasks {
  BinaryMask full;
  BinaryMask visible;
  BinaryMask invisible;
  BinaryMask occluder;
};

inline TargetMasks decompose(const BinaryMask& full, const BinaryMask& occluder) {
  detail::require_same_dims(full, occluder, "decompose");
  if (is_empty(full)) throw EmptyMaskError("decompose: empty full mask");
  return {full, subtract(full, occluder), intersect(full, occluder), occluder};
}

inline bool mode_defined(const TargetMasks& t, EvalMode mode) {
  return mode != EvalMode::kInvisible || !is_empty(t.invisible);
}

inline std::optional<BinaryMask> select_target(const TargetMasks& t, EvalMode mode) {
  switch (mode) {
    case EvalMode::kFull: return t.full;
    case EvalMode::kVisible: return t.visible;
    case EvalMode::kInvisible:
      if (is_empty(t.invisible)) return std::nullopt;
      return t.invisible;
  }
  return std::nullopt;
}

// The part of `pred` that a mode scores.
inline BinaryMask scored_prediction(const BinaryMask& pred, const TargetMasks& t, EvalMode mode) {
  if (mode == EvalMode::kInvisible) return intersect(pred, t.occluder);
  detail::require_same_dims(pred, t.full, "scored_prediction");
  return pred;
}

// Metrics for one mode, or nullopt when the mode is undefined.
inline std::optional<MetricPair> score_mode(const BinaryMask& pred, const TargetMasks& t,
                                            EvalMode mode) {
  auto target = select_target(t, mode);
  if (!target) return std::nullopt;
  return score(scored_prediction(pred, t, mode), *target);
}

}  // namespace occbench

#endif  // OCCBENCH_PROTOCOL_HPP_
