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

// Rule-based stand-ins for segmentation models. They read the ground truth
// directly, so their scores under each evaluation mode are known exactly and
// the pipeline can be checked end to end without a network.
//
//   occluder_aware     M_vis: segments visible tissue, suppresses the occluder
//   occluder_agnostic  M_full: segments straight through the occluder
//   perfect_amodal     M_full, never perturbed
//   tool_spill         M_full ∪ (M_o ∩ target box grown 10% per side)
//   full_box           the prompt box, filled
//   null               nothing

#ifndef OCCBENCH_ORACLE_HPP_
#define OCCBENCH_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "occbench/distance.hpp"
#include "occbench/error.hpp"
#include "occbench/mask.hpp"
#include "occbench/prompt.hpp"
#include "occbench/protocol.hpp"
#include "occbench/rng.hpp"

namespace occbench {

enum class Archetype {
  kOccluderAware,
  kOccluderAgnostic,
  kPerfectAmodal,
  kNull,
  kFullBox,
  kToolSpill,
};

inline std::string_view to_string(Archetype a) {
  switch (a) {
    case Archetype::kOccluderAware: return "occluder_aware";
    case Archetype::kOccluderAgnostic: return "occluder_agnostic";
    case Archetype::kPerfectAmodal: return "perfect_amodal";
    case Archetype::kNull: return "null";
    case Archetype::kFullBox: return "full_box";
    case Archetype::kToolSpill: return "tool_spill";
  }
  return "?";
}

inline Archetype parse_archetype(std::string_view s) {
  for (auto a : {Archetype::kOccluderAware, Archetype::kOccluderAgnostic,
                 Archetype::kPerfectAmodal, Archetype::kNull, Archetype::kFullBox,
                 Archetype::kToolSpill}) {
    if (s == to_string(a)) return a;
  }
  throw InvalidInputError("unknown archetype: " + std::string(s));
}

struct ArchetypeSpec {
  Archetype kind = Archetype::kOccluderAware;
  int noise = 0;  // max boundary perturbation, pixels
};

// Target bbox grown by round(10% of its side) per side, clamped.
inline BoundingBox spill_box(const BinaryMask& full) {
  const auto b = bounding_box(full);
  const int mx = (b.width() + 5) / 10;
  const int my = (b.height() + 5) / 10;
  return clamp_box({b.x_min - mx, b.y_min - my, b.x_max + mx, b.y_max + my}, full.dims());
}

// Dilates (k > 0) or erodes (k < 0) by a radius k drawn uniformly from
// [-noise, noise] on the sample's stream.
inline BinaryMask perturb_boundary(const BinaryMask& m, int noise, std::uint64_t seed) {
  if (noise <= 0) return m;
  CounterRng rng(StreamKey(seed).mix("noise").value());
  const int k = static_cast<int>(rng.uniform_int(-noise, noise));
  if (k > 0) return dilate(m, k);
  if (k < 0) return erode(m, -k);
  return m;
}

inline BinaryMask predict(const ArchetypeSpec& spec, const TargetMasks& t, const Prompt& prompt,
                          std::uint64_t seed) {
  if (spec.noise < 0) throw InvalidInputError("archetype noise must be >= 0");
  BinaryMask out;
  switch (spec.kind) {
    case Archetype::kOccluderAware:
      out = t.visible;
      break;
    case Archetype::kOccluderAgnostic:
      out = t.full;
      break;
    case Archetype::kPerfectAmodal:
      return t.full;
    case Archetype::kNull:
      return BinaryMask(t.full.dims());
    case Archetype::kFullBox:
      out = fill_box(t.full.dims(), prompt.box ? *prompt.box : *box_prompt(t.full).box);
      break;
    case Archetype::kToolSpill:
      out = unite(t.full, intersect(t.occluder, fill_box(t.full.dims(), spill_box(t.full))));
      break;
  }
  return perturb_boundary(out, spec.noise, seed);
}

}  // namespace occbench

#endif  // OCCBENCH_ORACLE_HPP_
