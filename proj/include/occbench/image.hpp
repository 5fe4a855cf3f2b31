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

#ifndef OCCBENCH_IMAGE_HPP_
#define OCCBENCH_IMAGE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "occbench/error.hpp"
#include "occbench/mask.hpp"

namespace occbench {

using Rgb = std::array<std::uint8_t, 3>;

// 8-bit interleaved RGB raster.
class RgbImage {
 public:
  RgbImage() = default;
  RgbImage(int width, int height, Rgb fill = {0, 0, 0}) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
      throw InvalidInputError("image dimensions must be positive, got " +
                              std::to_string(width) + "x" + std::to_string(height));
    }
    data_.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t i = 0; i < data_.size(); i += 3) {
      data_[i] = fill[0];
      data_[i + 1] = fill[1];
      data_[i + 2] = fill[2];
    }
  }
  explicit RgbImage(Dims d, Rgb fill = {0, 0, 0}) : RgbImage(d.width, d.height, fill) {}

  int width() const { return width_; }
  int height() const { return height_; }
  Dims dims() const { return {width_, height_}; }

  Rgb get(int x, int y) const {
    const auto i = index(x, y);
    return {data_[i], data_[i + 1], data_[i + 2]};
  }
  void set(int x, int y, Rgb c) {
    const auto i = index(x, y);
    data_[i] = c[0];
    data_[i + 1] = c[1];
    data_[i + 2] = c[2];
  }

  std::span<const std::uint8_t> data() const { return data_; }
  std::span<std::uint8_t> data() { return data_; }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return (static_cast<std::size_t>(y) * width_ + x) * 3;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

// Hard composite: copies `src` pixels where `mask` is set. All three rasters
// must share dimensions.
inline void composite(RgbImage& dst, const RgbImage& src, const BinaryMask& mask) {
  if (dst.dims() != src.dims() || dst.dims() != mask.dims()) {
    throw InvalidInputError("composite: dimension mismatch");
  }
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (mask.get(x, y)) dst.set(x, y, src.get(x, y));
    }
  }
}

inline void fill_masked(RgbImage& dst, const BinaryMask& mask, Rgb color) {
  if (dst.dims() != mask.dims()) throw InvalidInputError("fill_masked: dimension mismatch");
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (mask.get(x, y)) dst.set(x, y, color);
    }
  }
}

}  // namespace occbench

#endif  // OCCBENCH_IMAGE_HPP_
