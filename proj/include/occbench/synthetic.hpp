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

// Synthetic stand-ins for endoscopy frames and instrument crops: elliptical
// lesions on a textured background, and straight shafts with a wider head.
// Used by the demos, the test suite and `occbench synth`.

#ifndef OCCBENCH_SYNTHETIC_HPP_
#define OCCBENCH_SYNTHETIC_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "occbench/image.hpp"
#include "occbench/mask.hpp"
#include "occbench/occlusion.hpp"
#include "occbench/rng.hpp"

namespace occbench {

struct SyntheticDatasetSpec {
  int count = 64;
  int width = 128;
  int height = 128;
  double min_radius = 12.0;
  double max_radius = 26.0;
};

inline std::uint8_t clamp_u8(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

// Rotated filled ellipse; always contains at least its centre pixel.
inline BinaryMask ellipse_mask(Dims dims, double cx, double cy, double rx, double ry,
                               double angle_rad) {
  BinaryMask m(dims);
  const double c = std::cos(angle_rad), s = std::sin(angle_rad);
  for (int y = 0; y < dims.height; ++y) {
    for (int x = 0; x < dims.width; ++x) {
      const double dx = x - cx, dy = y - cy;
      const double u = (c * dx + s * dy) / rx;
      const double v = (-s * dx + c * dy) / ry;
      if (u * u + v * v <= 1.0) m.set(x, y, true);
    }
  }
  const int px = std::clamp(static_cast<int>(std::lround(cx)), 0, dims.width - 1);
  const int py = std::clamp(static_cast<int>(std::lround(cy)), 0, dims.height - 1);
  m.set(px, py, true);
  return m;
}

inline std::vector<SourceSample> make_synthetic_sources(const SyntheticDatasetSpec& spec,
                                                        std::uint64_t seed) {
  if (spec.count < 1) throw InvalidInputError("synthetic dataset needs at least one image");
  std::vector<SourceSample> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  const Dims dims{spec.width, spec.height};
  for (int i = 0; i < spec.count; ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "img%04d", i);
    CounterRng rng(StreamKey(seed).mix("synthetic-source").mix(std::uint64_t(i)).value());
    const double rx = rng.uniform(spec.min_radius, spec.max_radius);
    const double ry = rng.uniform(spec.min_radius, spec.max_radius);
    const double jitter = 0.15 * std::min(spec.width, spec.height);
    const double cx = 0.5 * (spec.width - 1) + rng.uniform(-jitter, jitter);
    const double cy = 0.5 * (spec.height - 1) + rng.uniform(-jitter, jitter);
    const double angle = rng.uniform(0.0, std::numbers::pi);
    auto mask = ellipse_mask(dims, cx, cy, rx, ry, angle);

    RgbImage image(dims);
    const double base_r = rng.uniform(170, 220), base_g = rng.uniform(90, 130);
    for (int y = 0; y < spec.height; ++y) {
      for (int x = 0; x < spec.width; ++x) {
        const double shade = 20.0 * std::sin(0.11 * x + 0.07 * y) + rng.uniform(-8, 8);
        const bool fg = mask.get(x, y);
        image.set(x, y,
                  {clamp_u8(base_r + shade + (fg ? 30 : 0)), clamp_u8(base_g + shade - (fg ? 40 : 0)),
                   clamp_u8(base_g + 0.5 * shade - (fg ? 30 : 0))});
      }
    }
    out.push_back({id, std::move(image), std::move(mask)});
  }
  return out;
}

// Shaft widths span thin graspers to wide retractors so every severity bin is
// reachable on lesions of the default size range.
inline ToolLibrary make_synthetic_tools(std::uint64_t seed, int count = 8) {
  if (count < 1) throw InvalidInputError("synthetic tool library needs at least one tool");
  ToolLibrary out;
  for (int i = 0; i < count; ++i) {
    CounterRng rng(StreamKey(seed).mix("synthetic-tool").mix(std::uint64_t(i)).value());
    const int shaft = 6 + (54 * i) / std::max(1, count - 1);
    const int head = shaft + static_cast<int>(rng.uniform_int(2, 8));
    const int length = static_cast<int>(rng.uniform_int(110, 140));
    const int head_len = static_cast<int>(rng.uniform_int(12, 20));
    const int w = head;
    RgbImage rgb(w, length);
    BinaryMask mask(w, length);
    const double tone = rng.uniform(150, 200);
    for (int y = 0; y < length; ++y) {
      const int half = (y < head_len ? head : shaft) / 2;
      for (int x = w / 2 - half; x < w / 2 - half + (y < head_len ? head : shaft); ++x) {
        if (x < 0 || x >= w) continue;
        mask.set(x, y, true);
        const double g = tone + 40.0 * std::cos(std::numbers::pi * (x - w / 2.0) / w);
        rgb.set(x, y, {clamp_u8(g), clamp_u8(g), clamp_u8(g + 10)});
      }
    }
    char id[32];
    std::snprintf(id, sizeof id, "tool%02d", i);
    out.push_back(ToolInstance::from_frame(rgb, mask, id));
  }
  return out;
}

}  // namespace occbench

#endif  // OCCBENCH_SYNTHETIC_HPP_
