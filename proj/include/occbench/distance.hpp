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

// Exact Euclidean distance transforms over binary rasters.
//
// The transform is the separable lower-envelope-of-parabolas algorithm of
// Felzenszwalb & Huttenlocher, evaluated on squared integer distances so the
// result is exact (not a chamfer approximation). Squared distances are
// returned as integers; callers take the square root once at the end, which
// keeps results bit-identical to a brute-force sqrt(dx*dx + dy*dy) search.

#ifndef OCCBENCH_DISTANCE_HPP_
#define OCCBENCH_DISTANCE_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "occbench/mask.hpp"

namespace occbench {

inline constexpr std::int64_t kNoSite = std::numeric_limits<std::int64_t>::max();

namespace detail {

// One-dimensional squared distance transform. `f[i]` is the cost at i
// (kNoSite = no site). Writes min_j (i - j)^2 + f[j] into `d`.
inline void edt_1d(const std::vector<std::int64_t>& f, std::vector<std::int64_t>& d,
                   std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  v.resize(n);
  z.resize(n + 1);
  d.assign(n, kNoSite);

  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (f[q] == kNoSite) continue;
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -std::numeric_limits<double>::infinity();
      z[1] = std::numeric_limits<double>::infinity();
      continue;
    }
    double s = 0.0;
    while (true) {
      const int p = v[k];
      // Intersection of parabolas rooted at p and q.
      s = static_cast<double>((f[q] + static_cast<std::int64_t>(q) * q) -
                              (f[p] + static_cast<std::int64_t>(p) * p)) /
          (2.0 * (q - p));
      if (s <= z[k] && k > 0) {
        --k;
        continue;
      }
      break;
    }
    if (s <= z[k]) {
      // k == 0 and q dominates everywhere.
      v[0] = q;
      z[0] = -std::numeric_limits<double>::infinity();
      z[1] = std::numeric_limits<double>::infinity();
      continue;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  if (k < 0) return;

  int j = 0;
  for (int q = 0; q < n; ++q) {
    while (z[j + 1] < q) ++j;
    const std::int64_t dq = q - v[j];
    d[q] = dq * dq + f[v[j]];
  }
}

}  // namespace detail

// Squared distance from every pixel to the nearest pixel where `sites` is
// true. Pixels with no reachable site (no sites at all) hold kNoSite.
inline std::vector<std::int64_t> squared_distance_to_sites(const BinaryMask& sites) {
  const int w = sites.width();
  const int h = sites.height();
  std::vector<std::int64_t> grid(static_cast<std::size_t>(w) * h, kNoSite);

  std::vector<std::int64_t> f, d;
  std::vector<int> v;
  std::vector<double> z;

  // Columns: plain 1-D distance to sites along y.
  f.resize(h);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) f[y] = sites.get(x, y) ? 0 : kNoSite;
    detail::edt_1d(f, d, v, z);
    for (int y = 0; y < h; ++y) grid[static_cast<std::size_t>(y) * w + x] = d[y];
  }
  // Rows: combine.
  f.resize(w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) f[x] = grid[static_cast<std::size_t>(y) * w + x];
    detail::edt_1d(f, d, v, z);
    for (int x = 0; x < w; ++x) grid[static_cast<std::size_t>(y) * w + x] = d[x];
  }
  return grid;
}

// Per-pixel Euclidean distance field; row-major like BinaryMask.
struct DistanceField {
  Dims dims;
  std::vector<double> values;

  double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * dims.width + x];
  }
};

namespace detail {

// Squared distance from each foreground pixel to the nearest background
// pixel, treating the ring just outside the image as background.
inline std::vector<std::int64_t> squared_interior_distance(const BinaryMask& m) {
  const int w = m.width();
  const int h = m.height();
  BinaryMask padded(w + 2, h + 2, true);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) padded.set(x + 1, y + 1, !m.get(x, y));
  }
  auto full = squared_distance_to_sites(padded);
  std::vector<std::int64_t> out(static_cast<std::size_t>(w) * h, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (m.get(x, y)) {
        out[static_cast<std::size_t>(y) * w + x] =
            full[static_cast<std::size_t>(y + 1) * (w + 2) + (x + 1)];
      }
    }
  }
  return out;
}

}  // namespace detail

// Euclidean distance from each foreground pixel to the nearest background or
// out-of-image pixel (the image border sits at unit distance from edge
// pixels). Background pixels carry 0.
inline DistanceField distance_to_boundary(const BinaryMask& m) {
  if (is_empty(m)) throw EmptyMaskError("distance_to_boundary: empty mask");
  auto sq = detail::squared_interior_distance(m);
  DistanceField field{m.dims(), std::vector<double>(sq.size(), 0.0)};
  for (std::size_t i = 0; i < sq.size(); ++i) {
    field.values[i] = std::sqrt(static_cast<double>(sq[i]));
  }
  return field;
}

// Euclidean dilation by a disk of the given radius (pixels within distance
// `radius` of the foreground are added).
inline BinaryMask dilate(const BinaryMask& m, int radius) {
  if (radius <= 0 || is_empty(m)) return m;
  auto sq = squared_distance_to_sites(m);
  const std::int64_t r2 = static_cast<std::int64_t>(radius) * radius;
  BinaryMask out(m.dims());
  auto dst = out.data();
  for (std::size_t i = 0; i < sq.size(); ++i) dst[i] = sq[i] <= r2 ? 1 : 0;
  return out;
}

// Euclidean erosion: keeps foreground pixels whose distance to the nearest
// background (or border) exceeds `radius`.
inline BinaryMask erode(const BinaryMask& m, int radius) {
  if (radius <= 0 || is_empty(m)) return m;
  auto sq = detail::squared_interior_distance(m);
  const std::int64_t r2 = static_cast<std::int64_t>(radius) * radius;
  BinaryMask out(m.dims());
  auto dst = out.data();
  for (std::size_t i = 0; i < sq.size(); ++i) dst[i] = sq[i] > r2 ? 1 : 0;
  return out;
}

}  // namespace occbench

#endif  // OCCBENCH_DISTANCE_HPP_
