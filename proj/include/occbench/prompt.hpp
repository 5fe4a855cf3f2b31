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

// Spatial prompts derived from ground-truth masks: an interior point drawn
// from the deeper half of the distance field, and a tight box enlarged by 5%
// of its own side length on each side.

#ifndef OCCBENCH_PROMPT_HPP_
#define OCCBENCH_PROMPT_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "occbench/distance.hpp"
#include "occbench/error.hpp"
#include "occbench/mask.hpp"
#include "occbench/rng.hpp"

namespace occbench {

enum class PromptKind { kPoint, kBox };

inline std::string_view to_string(PromptKind k) {
  return k == PromptKind::kPoint ? "point" : "box";
}

inline PromptKind parse_prompt_kind(std::string_view s) {
  if (s == "point") return PromptKind::kPoint;
  if (s == "box") return PromptKind::kBox;
  throw InvalidInputError("unknown prompt kind: " + std::string(s));
}

// Exactly one of point/box is set, matching `kind`.
struct Prompt {
  PromptKind kind = PromptKind::kPoint;
  std::optional<Point2D> point;
  std::optional<BoundingBox> box;
  std::uint64_t source_seed = 0;

  friend bool operator==(const Prompt&, const Prompt&) = default;
};

// Lower median (index (n-1)/2 of the sorted values), no interpolation.
template <typename T>
T lower_median(std::vector<T> values) {
  if (values.empty()) throw InvalidInputError("lower_median: no values");
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

// Samples uniformly among foreground pixels whose boundary distance is
// strictly above the lower median; falls back to distance >= median when no
// pixel is strictly deeper. Works on squared distances so ties are exact.
inline Prompt point_prompt(const BinaryMask& mask, std::uint64_t seed) {
  if (is_empty(mask)) throw EmptyMaskError("point_prompt: empty mask");
  const auto sq = detail::squared_interior_distance(mask);

  std::vector<std::int64_t> fg;
  std::vector<std::size_t> fg_index;
  for (std::size_t i = 0; i < sq.size(); ++i) {
    if (mask.data()[i]) {
      fg.push_back(sq[i]);
      fg_index.push_back(i);
    }
  }
  const auto median = lower_median(fg);

  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < fg.size(); ++j) {
    if (fg[j] > median) candidates.push_back(fg_index[j]);
  }
  if (candidates.empty()) {
    for (std::size_t j = 0; j < fg.size(); ++j) {
      if (fg[j] >= median) candidates.push_back(fg_index[j]);
    }
  }

  CounterRng rng(seed);
  const auto pick = candidates[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(candidates.size()) - 1))];
  Prompt p;
  p.kind = PromptKind::kPoint;
  p.point = Point2D{static_cast<int>(pick % mask.width()), static_cast<int>(pick / mask.width())};
  p.source_seed = seed;
  return p;
}

// round(0.05 * side), half away from zero, computed in integers.
inline int box_margin(int side) { return (side + 10) / 20; }

inline Prompt box_prompt(const BinaryMask& mask) {
  if (is_empty(mask)) throw EmptyMaskError("box_prompt: empty mask");
  const auto tight = bounding_box(mask);
  const int mx = box_margin(tight.width());
  const int my = box_margin(tight.height());
  BoundingBox grown{tight.x_min - mx, tight.y_min - my, tight.x_max + mx, tight.y_max + my};
  Prompt p;
  p.kind = PromptKind::kBox;
  p.box = clamp_box(grown, mask.dims());
  return p;
}

// Point and box prompts for one ground-truth mask.
struct PromptPair {
  Prompt point;
  Prompt box;

  const Prompt& get(PromptKind k) const { return k == PromptKind::kPoint ? point : box; }
};

inline std::uint64_t prompt_stream_key(std::uint64_t master_seed, std::string_view source_id) {
  return StreamKey(master_seed).mix("prompt").mix(source_id).value();
}

inline PromptPair make_prompts(const BinaryMask& full, std::uint64_t point_seed) {
  return {point_prompt(full, point_seed), box_prompt(full)};
}

}  // namespace occbench

#endif  // OCCBENCH_PROMPT_HPP_
