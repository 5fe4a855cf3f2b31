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

// Similarity transforms (scale + rotate about the mask centroid) and
// clipped pasting of rasters onto a canvas. Resampling is nearest-neighbour
// through the inverse map, so binary inputs stay binary.

#ifndef OCCBENCH_TRANSFORM_HPP_
#define OCCBENCH_TRANSFORM_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>

#include "occbench/error.hpp"
#include "occbench/image.hpp"
#include "occbench/mask.hpp"

namespace occbench {

// Output geometry of a transform: output pixel (u, v) samples source pixel
// source_of(u, v). Positive rotation turns the raster counter-clockwise as
// displayed (y axis pointing down).
class ResampleGrid {
 public:
  ResampleGrid(Dims src, double cx, double cy, double scale, double rotation_deg)
      : cx_(cx), cy_(cy), inv_scale_(1.0 / scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
      throw InvalidInputError("transform: scale must be positive");
    }
    const double t = rotation_deg * std::numbers::pi / 180.0;
    cos_ = std::cos(t);
    sin_ = std::sin(t);

    // Forward-map the continuous source extent to size the output canvas.
    const double xs[2] = {-0.5, src.width - 0.5};
    const double ys[2] = {-0.5, src.height - 0.5};
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (double x : xs) {
      for (double y : ys) {
        const double dx = (x - cx) * scale;
        const double dy = (y - cy) * scale;
        const double fx = cx + cos_ * dx + sin_ * dy;
        const double fy = cy - sin_ * dx + cos_ * dy;
        min_x = std::min(min_x, fx);
        max_x = std::max(max_x, fx);
        min_y = std::min(min_y, fy);
        max_y = std::max(max_y, fy);
      }
    }
    constexpr double kEps = 1e-9;
    origin_x_ = static_cast<int>(std::ceil(min_x - kEps));
    origin_y_ = static_cast<int>(std::ceil(min_y - kEps));
    out_w_ = std::max(1, static_cast<int>(std::floor(max_x + kEps)) - origin_x_ + 1);
    out_h_ = std::max(1, static_cast<int>(std::floor(max_y + kEps)) - origin_y_ + 1);
  }

  Dims out_dims() const { return {out_w_, out_h_}; }
  // Source-frame coordinate of output pixel (0, 0).
  Point2D origin() const { return {origin_x_, origin_y_}; }

  Point2D source_of(int u, int v) const {
    const double qx = (u + origin_x_) - cx_;
    const double qy = (v + origin_y_) - cy_;
    const double px = cx_ + inv_scale_ * (cos_ * qx - sin_ * qy);
    const double py = cy_ + inv_scale_ * (sin_ * qx + cos_ * qy);
    return {static_cast<int>(std::floor(px + 0.5)), static_cast<int>(std::floor(py + 0.5))};
  }

 private:
  double cx_, cy_, inv_scale_;
  double cos_ = 1.0, sin_ = 0.0;
  int origin_x_ = 0, origin_y_ = 0, out_w_ = 1, out_h_ = 1;
};

inline ResampleGrid make_grid(const BinaryMask& m, double scale, double rotation_deg) {
  auto [cx, cy] = centroid_exact(m);
  return ResampleGrid(m.dims(), cx, cy, scale, rotation_deg);
}

inline BinaryMask resample(const BinaryMask& m, const ResampleGrid& grid) {
  BinaryMask out(grid.out_dims());
  for (int v = 0; v < out.height(); ++v) {
    for (int u = 0; u < out.width(); ++u) {
      const auto p = grid.source_of(u, v);
      if (m.at(p.x, p.y)) out.set(u, v);
    }
  }
  return out;
}

// Pixels outside the source raster come out black.
inline RgbImage resample(const RgbImage& img, const ResampleGrid& grid) {
  RgbImage out(grid.out_dims());
  for (int v = 0; v < out.height(); ++v) {
    for (int u = 0; u < out.width(); ++u) {
      const auto p = grid.source_of(u, v);
      if (p.x >= 0 && p.y >= 0 && p.x < img.width() && p.y < img.height()) {
        out.set(u, v, img.get(p.x, p.y));
      }
    }
  }
  return out;
}

// Scales the mask about its centroid, then rotates about the centroid. The
// output canvas is sized to contain the transformed footprint.
inline BinaryMask transform_mask(const BinaryMask& m, double scale, double rotation_deg) {
  if (!(scale > 0.0)) throw InvalidInputError("transform_mask: scale must be positive");
  if (is_empty(m)) throw DegenerateTransformError("transform_mask: empty input");
  auto out = resample(m, make_grid(m, scale, rotation_deg));
  if (is_empty(out)) throw DegenerateTransformError("transform_mask: transformed mask is empty");
  return out;
}

// Top-left canvas position at which a raster of `src` size is centred on `at`.
inline Point2D paste_origin(Dims src, Point2D at) {
  return {at.x - src.width / 2, at.y - src.height / 2};
}

// Places `src` centred at `at` on a canvas of `dst` size; out-of-canvas
// pixels are clipped, so the result may be empty.
inline BinaryMask paste(Dims dst, const BinaryMask& src, Point2D at) {
  BinaryMask out(dst);
  const auto o = paste_origin(src.dims(), at);
  const int y0 = std::max(0, -o.y), y1 = std::min(src.height(), dst.height - o.y);
  const int x0 = std::max(0, -o.x), x1 = std::min(src.width(), dst.width - o.x);
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      if (src.get(x, y)) out.set(x + o.x, y + o.y);
    }
  }
  return out;
}

// Counterpart of paste() for colour: returns a canvas-sized raster holding
// `src` pixels at the same placement (black elsewhere).
inline RgbImage paste(Dims dst, const RgbImage& src, Point2D at) {
  RgbImage out(dst);
  const auto o = paste_origin(src.dims(), at);
  const int y0 = std::max(0, -o.y), y1 = std::min(src.height(), dst.height - o.y);
  const int x0 = std::max(0, -o.x), x1 = std::min(src.width(), dst.width - o.x);
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) out.set(x + o.x, y + o.y, src.get(x, y));
  }
  return out;
}

}  // namespace occbench

#endif  // OCCBENCH_TRANSFORM_HPP_
