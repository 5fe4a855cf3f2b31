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

// Overlap and surface metrics for binary segmentations.
//
//  * dice: 2|A∩B| / (|A|+|B|); two empty masks score 1, one empty scores 0.
//  * hd95: symmetric 95th-percentile Hausdorff distance between the
//    4-connected boundary pixels of the two masks, nearest-rank percentile
//    (smallest value whose rank is >= 0.95 n). Two empty masks give 0; one
//    empty mask gives the image diagonal.
//  * relative_degradation: (clean - occluded) / clean * 100.

#ifndef OCCBENCH_METRICS_HPP_
#define OCCBENCH_METRICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "occbench/distance.hpp"
#include "occbench/error.hpp"
#include "occbench/mask.hpp"

namespace occbench {

struct MetricPair {
  double dsc = 0.0;
  double hd95 = 0.0;

  friend bool operator==(const MetricPair&, const MetricPair&) = default;
};

inline double dice(const BinaryMask& pred, const BinaryMask& target) {
  detail::require_same_dims(pred, target, "dice");
  const auto p = area(pred);
  const auto t = area(target);
  if (p + t == 0) return 1.0;
  return 2.0 * static_cast<double>(overlap_area(pred, target)) / static_cast<double>(p + t);
}

// 1-based nearest rank for percentile `pct` (0..100] of n values.
inline std::size_t nearest_rank(std::size_t n, int pct) {
  const std::size_t k = (static_cast<std::size_t>(pct) * n + 99) / 100;
  return std::clamp<std::size_t>(k, 1, n);
}

template <typename T>
T percentile_nearest_rank(std::vector<T> values, int pct) {
  if (values.empty()) throw InvalidInputError("percentile of an empty set");
  const auto k = nearest_rank(values.size(), pct);
  auto it = values.begin() + static_cast<std::ptrdiff_t>(k - 1);
  std::nth_element(values.begin(), it, values.end());
  return *it;
}

inline double image_diagonal(Dims d) {
  return std::sqrt(static_cast<double>(d.width) * d.width + static_cast<double>(d.height) * d.height);
}

namespace detail {

// Squared distances from each boundary pixel of `from` to the nearest
// boundary pixel of `to`.
inline std::vector<std::int64_t> directed_boundary_sq(const std::vector<Point2D>& from,
                                                      const BinaryMask& to_boundary) {
  const auto field = squared_distance_to_sites(to_boundary);
  std::vector<std::int64_t> out;
  out.reserve(from.size());
  for (auto p : from) out.push_back(field[static_cast<std::size_t>(p.y) * to_boundary.width() + p.x]);
  return out;
}

}  // namespace detail

inline double hd_percentile(const BinaryMask& pred, const BinaryMask& target, int pct) {
  detail::require_same_dims(pred, target, "hd95");
  const auto bp = boundary_pixels(pred);
  const auto bt = boundary_pixels(target);
  if (bp.empty() && bt.empty()) return 0.0;
  if (bp.empty() || bt.empty()) return image_diagonal(pred.dims());

  BinaryMask pred_b(pred.dims()), target_b(target.dims());
  for (auto p : bp) pred_b.set(p.x, p.y);
  for (auto p : bt) target_b.set(p.x, p.y);

  const auto fwd = percentile_nearest_rank(detail::directed_boundary_sq(bp, target_b), pct);
  const auto bwd = percentile_nearest_rank(detail::directed_boundary_sq(bt, pred_b), pct);
  return std::sqrt(static_cast<double>(std::max(fwd, bwd)));
}

inline double hd95(const BinaryMask& pred, const BinaryMask& target) {
  return hd_percentile(pred, target, 95);
}

inline MetricPair score(const BinaryMask& pred, const BinaryMask& target) {
  return {dice(pred, target), hd95(pred, target)};
}

inline double relative_degradation(double clean_dsc, double occluded_dsc) {
  if (!(clean_dsc > 0.0)) {
    throw UndefinedDegradationError("relative degradation undefined for clean DSC <= 0");
  }
  return (clean_dsc - occluded_dsc) / clean_dsc * 100.0;
}

struct DegradationStat {
  double clean_dsc = 0.0;
  double occluded_dsc = 0.0;
  double delta_pct = 0.0;

  static DegradationStat of(double clean, double occluded) {
    return {clean, occluded, relative_degradation(clean, occluded)};
  }
};

}  // namespace occbench

#endif  // OCCBENCH_METRICS_HPP_
