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

// Binary raster masks and the set/geometry primitives shared by every stage
// of the benchmark. Coordinates are x = column, y = row, origin top-left.

#ifndef OCCBENCH_MASK_HPP_
#define OCCBENCH_MASK_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "occbench/error.hpp"

namespace occbench {

struct Point2D {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
  friend auto operator<=>(const Point2D& a, const Point2D& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

// Inclusive pixel box.
struct BoundingBox {
  int x_min = 0;
  int y_min = 0;
  int x_max = 0;
  int y_max = 0;

  int width() const { return x_max - x_min + 1; }
  int height() const { return y_max - y_min + 1; }
  bool contains(Point2D p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  bool contains(const BoundingBox& o) const {
    return o.x_min >= x_min && o.x_max <= x_max && o.y_min >= y_min &&
           o.y_max <= y_max;
  }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

struct Dims {
  int width = 0;
  int height = 0;

  friend bool operator==(const Dims&, const Dims&) = default;
};

class BinaryMask {
 public:
  BinaryMask() = default;

  BinaryMask(int width, int height, bool fill = false) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
      throw InvalidInputError("mask dimensions must be positive, got " +
                              std::to_string(width) + "x" + std::to_string(height));
    }
    data_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
  }

  explicit BinaryMask(Dims d, bool fill = false) : BinaryMask(d.width, d.height, fill) {}

  // Builds a mask from rows of '#' (foreground) and anything else (background).
  static BinaryMask from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw InvalidInputError("from_rows: no rows");
    BinaryMask m(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
    for (int y = 0; y < m.height(); ++y) {
      if (static_cast<int>(rows[y].size()) != m.width()) {
        throw InvalidInputError("from_rows: ragged rows");
      }
      for (int x = 0; x < m.width(); ++x) m.set(x, y, rows[y][x] == '#');
    }
    return m;
  }

  int width() const { return width_; }
  int height() const { return height_; }
  Dims dims() const { return {width_, height_}; }
  std::size_t size() const { return data_.size(); }
  bool empty_canvas() const { return data_.empty(); }

  bool in_bounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  bool get(int x, int y) const { return data_[index(x, y)] != 0; }
  bool at(int x, int y) const { return in_bounds(x, y) && get(x, y); }
  void set(int x, int y, bool v = true) { data_[index(x, y)] = v ? 1 : 0; }

  // Raw row-major storage, one byte per pixel holding 0 or 1.
  std::span<const std::uint8_t> data() const { return data_; }
  std::span<std::uint8_t> data() { return data_; }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

namespace detail {

inline void require_same_dims(const BinaryMask& a, const BinaryMask& b, const char* op) {
  if (a.dims() != b.dims()) {
    throw InvalidInputError(std::string(op) + ": dimension mismatch (" +
                            std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                            " vs " + std::to_string(b.width()) + "x" +
                            std::to_string(b.height()) + ")");
  }
}

template <typename Op>
BinaryMask combine(const BinaryMask& a, const BinaryMask& b, const char* name, Op op) {
  require_same_dims(a, b, name);
  BinaryMask out(a.dims());
  auto da = a.data();
  auto db = b.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = op(da[i], db[i]) ? 1 : 0;
  return out;
}

}  // namespace detail

inline BinaryMask intersect(const BinaryMask& a, const BinaryMask& b) {
  return detail::combine(a, b, "intersect", [](auto x, auto y) { return x && y; });
}

inline BinaryMask subtract(const BinaryMask& a, const BinaryMask& b) {
  return detail::combine(a, b, "subtract", [](auto x, auto y) { return x && !y; });
}

inline BinaryMask unite(const BinaryMask& a, const BinaryMask& b) {
  return detail::combine(a, b, "unite", [](auto x, auto y) { return x || y; });
}

inline std::int64_t area(const BinaryMask& m) {
  std::int64_t n = 0;
  for (auto v : m.data()) n += v;
  return n;
}

inline bool is_empty(const BinaryMask& m) {
  return std::none_of(m.data().begin(), m.data().end(), [](auto v) { return v != 0; });
}

// |a ∩ b| without materialising the intersection.
inline std::int64_t overlap_area(const BinaryMask& a, const BinaryMask& b) {
  detail::require_same_dims(a, b, "overlap_area");
  std::int64_t n = 0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) n += (da[i] & db[i]);
  return n;
}

inline BoundingBox bounding_box(const BinaryMask& m) {
  BoundingBox box{m.width(), m.height(), -1, -1};
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (!m.get(x, y)) continue;
      box.x_min = std::min(box.x_min, x);
      box.y_min = std::min(box.y_min, y);
      box.x_max = std::max(box.x_max, x);
      box.y_max = std::max(box.y_max, y);
    }
  }
  if (box.x_max < 0) throw EmptyMaskError("bounding_box: empty mask");
  return box;
}

// Mean of foreground coordinates, unrounded.
inline std::pair<double, double> centroid_exact(const BinaryMask& m) {
  std::int64_t sx = 0, sy = 0, n = 0;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (!m.get(x, y)) continue;
      sx += x;
      sy += y;
      ++n;
    }
  }
  if (n == 0) throw EmptyMaskError("centroid: empty mask");
  return {static_cast<double>(sx) / n, static_cast<double>(sy) / n};
}

// Rounded half away from zero.
inline Point2D centroid(const BinaryMask& m) {
  auto [cx, cy] = centroid_exact(m);
  return {static_cast<int>(std::lround(cx)), static_cast<int>(std::lround(cy))};
}

// Foreground pixels with at least one background or out-of-image 4-neighbour,
// in row-major order.
inline std::vector<Point2D> boundary_pixels(const BinaryMask& m) {
  std::vector<Point2D> out;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (!m.get(x, y)) continue;
      if (!m.at(x - 1, y) || !m.at(x + 1, y) || !m.at(x, y - 1) || !m.at(x, y + 1)) {
        out.push_back({x, y});
      }
    }
  }
  return out;
}

inline BinaryMask boundary_mask(const BinaryMask& m) {
  BinaryMask out(m.dims());
  for (auto p : boundary_pixels(m)) out.set(p.x, p.y);
  return out;
}

inline BinaryMask fill_box(Dims dims, const BoundingBox& box) {
  BinaryMask out(dims);
  for (int y = std::max(0, box.y_min); y <= std::min(dims.height - 1, box.y_max); ++y) {
    for (int x = std::max(0, box.x_min); x <= std::min(dims.width - 1, box.x_max); ++x) {
      out.set(x, y);
    }
  }
  return out;
}

inline BoundingBox clamp_box(BoundingBox b, Dims dims) {
  b.x_min = std::clamp(b.x_min, 0, dims.width - 1);
  b.x_max = std::clamp(b.x_max, 0, dims.width - 1);
  b.y_min = std::clamp(b.y_min, 0, dims.height - 1);
  b.y_max = std::clamp(b.y_max, 0, dims.height - 1);
  return b;
}

}  // namespace occbench

#endif  // OCCBENCH_MASK_HPP_
