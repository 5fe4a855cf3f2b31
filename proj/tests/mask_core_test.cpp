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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "occbench/distance.hpp"
#include "occbench/error.hpp"
#include "occbench/image.hpp"
#include "occbench/io.hpp"
#include "occbench/mask.hpp"
#include "occbench/transform.hpp"
#include "test_support.hpp"

namespace occbench {
namespace {

using testing::brute_distance_to_boundary;
using testing::count_fg;
using testing::random_mask;
using testing::random_nonempty_mask;

BinaryMask blob10() {
  return BinaryMask::from_rows({
      "#####.....",
      "#####.....",
  });
}

TEST(SetOps, IntersectExamples) {
  const BinaryMask all(3, 3, true);
  EXPECT_EQ(intersect(all, all), all);

  auto a = BinaryMask::from_rows({"##..", "##.."});
  auto b = BinaryMask::from_rows({"..##", "..##"});
  EXPECT_TRUE(is_empty(intersect(a, b)));

  auto blob = blob10();
  auto cover = BinaryMask::from_rows({"###.......", ".........."});
  EXPECT_EQ(area(intersect(blob, cover)), 3);
}

TEST(SetOps, SubtractExamples) {
  auto a = blob10();
  EXPECT_EQ(subtract(a, BinaryMask(a.dims())), a);
  EXPECT_TRUE(is_empty(subtract(a, a)));
  auto b = BinaryMask::from_rows({"###.......", ".........."});
  EXPECT_EQ(area(subtract(a, b)), 7);
}

TEST(SetOps, DimensionMismatchThrows) {
  BinaryMask a(3, 3), b(3, 4);
  EXPECT_THROW(intersect(a, b), InvalidInputError);
  EXPECT_THROW(subtract(a, b), InvalidInputError);
  EXPECT_THROW(unite(a, b), InvalidInputError);
}

TEST(SetOps, DecompositionIdentityProperty) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    auto a = random_mask(rng, 16);
    auto b = random_mask(rng, a.width(), a.height(), 0.5);
    const auto in = intersect(a, b);
    const auto out = subtract(a, b);
    EXPECT_EQ(unite(in, out), a);
    EXPECT_TRUE(is_empty(intersect(in, out)));
    EXPECT_EQ(area(in) + area(out), area(a));
    EXPECT_LE(area(in), std::min(area(a), area(b)));
  }
}

TEST(Area, Examples) {
  EXPECT_EQ(area(BinaryMask(4, 4)), 0);
  EXPECT_EQ(area(BinaryMask(4, 4, true)), 16);
  auto checker = BinaryMask::from_rows({"#.#.", ".#.#", "#.#.", ".#.#"});
  EXPECT_EQ(area(checker), 8);
}

TEST(Mask, RejectsNonPositiveDims) {
  EXPECT_THROW(BinaryMask(0, 3), InvalidInputError);
  EXPECT_THROW(BinaryMask(3, -1), InvalidInputError);
}

TEST(BoundingBox, Examples) {
  BinaryMask m(10, 10);
  m.set(2, 3);
  EXPECT_EQ(bounding_box(m), (BoundingBox{2, 3, 2, 3}));

  auto rect = fill_box({10, 10}, {2, 1, 6, 4});
  EXPECT_EQ(bounding_box(rect), (BoundingBox{2, 1, 6, 4}));

  BinaryMask two(10, 10);
  two.set(0, 0);
  two.set(9, 9);
  EXPECT_EQ(bounding_box(two), (BoundingBox{0, 0, 9, 9}));
  EXPECT_THROW(bounding_box(BinaryMask(4, 4)), EmptyMaskError);
}

TEST(Centroid, Examples) {
  BinaryMask m(10, 10);
  m.set(5, 5);
  EXPECT_EQ(centroid(m), (Point2D{5, 5}));
  EXPECT_EQ(centroid(fill_box({10, 10}, {0, 0, 2, 2})), (Point2D{1, 1}));
  BinaryMask two(10, 10);
  two.set(0, 0);
  two.set(4, 0);
  EXPECT_EQ(centroid(two), (Point2D{2, 0}));
  EXPECT_THROW(centroid(BinaryMask(3, 3)), EmptyMaskError);
}

TEST(Centroid, RoundsHalfAwayFromZero) {
  BinaryMask m(10, 10);
  m.set(0, 0);
  m.set(1, 0);  // mean x = 0.5
  EXPECT_EQ(centroid(m), (Point2D{1, 0}));
}

TEST(Boundary, Examples) {
  BinaryMask one(1, 1, true);
  EXPECT_EQ(boundary_pixels(one), (std::vector<Point2D>{{0, 0}}));
  EXPECT_EQ(boundary_pixels(fill_box({6, 6}, {1, 1, 4, 4})).size(), 12u);
  auto b3 = boundary_pixels(fill_box({5, 5}, {1, 1, 3, 3}));
  EXPECT_EQ(b3.size(), 8u);
  EXPECT_EQ(std::count(b3.begin(), b3.end(), Point2D{2, 2}), 0);
  EXPECT_TRUE(boundary_pixels(BinaryMask(3, 3)).empty());
}

TEST(Boundary, SubsetOfForegroundAndMatchesReference) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    auto m = random_mask(rng, 16);
    const auto got = boundary_pixels(m);
    const auto want = testing::brute_boundary(m);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      EXPECT_TRUE(m.get(got[k].x, got[k].y));
      EXPECT_EQ(got[k].x, want[k].first);
      EXPECT_EQ(got[k].y, want[k].second);
    }
  }
}

TEST(DistanceToBoundary, Examples) {
  EXPECT_EQ(distance_to_boundary(BinaryMask(1, 1, true)).at(0, 0), 1.0);
  const auto f5 = distance_to_boundary(BinaryMask(5, 5, true));
  EXPECT_EQ(f5.at(2, 2), 3.0);
  auto rect = fill_box({12, 9}, {2, 1, 9, 6});
  const auto fr = distance_to_boundary(rect);
  for (auto p : boundary_pixels(rect)) EXPECT_EQ(fr.at(p.x, p.y), 1.0);
  EXPECT_EQ(fr.at(0, 0), 0.0);
  EXPECT_THROW(distance_to_boundary(BinaryMask(3, 3)), EmptyMaskError);
}

TEST(DistanceToBoundary, MatchesBruteForceOnRandomMasks) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 3000; ++i) {
    auto m = random_nonempty_mask(rng, 16);
    const auto got = distance_to_boundary(m);
    const auto want = brute_distance_to_boundary(m);
    ASSERT_EQ(got.values.size(), want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
      ASSERT_EQ(got.values[k], want[k]) << "case " << i << " index " << k;
    }
  }
}

TEST(DistanceToBoundary, SparseAndDenseExtremes) {
  std::mt19937_64 rng(99);
  for (double density : {0.01, 0.99, 1.0}) {
    for (int i = 0; i < 200; ++i) {
      auto m = random_mask(rng, 16, 16, density);
      if (is_empty(m)) continue;
      const auto got = distance_to_boundary(m).values;
      EXPECT_EQ(got, brute_distance_to_boundary(m));
    }
  }
}

TEST(Morphology, DilateAndErodeByRadius) {
  BinaryMask dot(9, 9);
  dot.set(4, 4);
  EXPECT_EQ(area(dilate(dot, 1)), 5);
  EXPECT_EQ(area(dilate(dot, 2)), 13);
  EXPECT_EQ(dilate(dot, 0), dot);
  auto sq = fill_box({9, 9}, {1, 1, 7, 7});
  EXPECT_EQ(erode(sq, 1), fill_box({9, 9}, {2, 2, 6, 6}));
}

TEST(Transform, IdentityKeepsMask) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto m = random_nonempty_mask(rng, 16);
    auto t = transform_mask(m, 1.0, 0.0);
    // Canvas may only differ by cropping; compare the footprints.
    EXPECT_EQ(area(t), area(m));
    auto bm = bounding_box(m), bt = bounding_box(t);
    for (int y = 0; y < bm.height(); ++y)
      for (int x = 0; x < bm.width(); ++x)
        ASSERT_EQ(m.get(bm.x_min + x, bm.y_min + y), t.get(bt.x_min + x, bt.y_min + y));
  }
}

// Footprint normalised so its bbox starts at the origin.
std::set<std::pair<int, int>> footprint(const std::vector<std::pair<int, int>>& pts) {
  int mx = 1 << 30, my = 1 << 30;
  for (auto [x, y] : pts) {
    mx = std::min(mx, x);
    my = std::min(my, y);
  }
  std::set<std::pair<int, int>> out;
  for (auto [x, y] : pts) out.insert({x - mx, y - my});
  return out;
}

TEST(Transform, QuarterTurnOfLShapeRotatesEveryPixel) {
  const auto l = BinaryMask::from_rows({"##..", "##..", "##..", "##..", "####", "####"});
  const auto r = transform_mask(l, 1.0, 90.0);
  EXPECT_EQ(area(r), area(l));

  // Counter-clockwise as displayed with y down: (x, y) -> (y, -x).
  std::vector<std::pair<int, int>> want, got;
  for (int y = 0; y < l.height(); ++y)
    for (int x = 0; x < l.width(); ++x)
      if (l.get(x, y)) want.push_back({y, -x});
  for (int y = 0; y < r.height(); ++y)
    for (int x = 0; x < r.width(); ++x)
      if (r.get(x, y)) got.push_back({x, y});
  EXPECT_EQ(footprint(got), footprint(want));
}

TEST(Transform, HalfScaleArea) {
  const auto a = area(transform_mask(BinaryMask(20, 20, true), 0.5, 0.0));
  EXPECT_GE(a, 80);
  EXPECT_LE(a, 120);
}

TEST(Transform, AreaScalesRoughlyWithSquaredScale) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> s(0.5, 1.5), th(-180, 180);
  for (int i = 0; i < 200; ++i) {
    auto m = fill_box({40, 40}, {5, 8, 30, 33});
    const double scale = s(rng);
    const auto a = static_cast<double>(area(transform_mask(m, scale, th(rng))));
    const double nominal = static_cast<double>(area(m)) * scale * scale;
    EXPECT_NEAR(a, nominal, 0.2 * nominal);
  }
}

TEST(Transform, RotationRoundTripRecoversMostPixels) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> th(-180, 180);
  for (int i = 0; i < 100; ++i) {
    const int w = 10 + static_cast<int>(rng() % 12), h = 10 + static_cast<int>(rng() % 12);
    const auto m = fill_box({24, 24}, {1, 1, w, h});
    const double t = th(rng);
    const auto back = transform_mask(transform_mask(m, 1.0, t), 1.0, -t);
    // Align centroids before comparing.
    const auto cm = centroid(m), cb = centroid(back);
    std::int64_t kept = 0;
    for (int y = 0; y < back.height(); ++y)
      for (int x = 0; x < back.width(); ++x)
        if (back.get(x, y) && m.at(x - cb.x + cm.x, y - cb.y + cm.y)) ++kept;
    EXPECT_GE(static_cast<double>(kept), 0.9 * static_cast<double>(area(m))) << "theta " << t;
  }
}

TEST(Transform, RejectsBadInput) {
  EXPECT_THROW(transform_mask(BinaryMask(3, 3), 1.0, 0.0), DegenerateTransformError);
  EXPECT_THROW(transform_mask(BinaryMask(3, 3, true), 0.0, 0.0), InvalidInputError);
}

TEST(Paste, Examples) {
  BinaryMask src(10, 10, true);
  EXPECT_EQ(area(paste({100, 100}, src, {50, 50})), 100);
  EXPECT_EQ(area(paste({100, 100}, src, {0, 0})), 25);
  EXPECT_TRUE(is_empty(paste({100, 100}, src, {-50, -50})));
}

TEST(Paste, NeverGrowsArea) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pos(-20, 40);
  for (int i = 0; i < 500; ++i) {
    auto m = random_mask(rng, 16);
    EXPECT_LE(area(paste({24, 24}, m, {pos(rng), pos(rng)})), area(m));
  }
}

TEST(Io, MaskPngRoundTrip) {
  testing::ScratchDir dir("io");
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    auto m = random_mask(rng, 33);
    write_mask(dir.path() / "m.png", m);
    EXPECT_EQ(read_mask(dir.path() / "m.png"), m);
  }
}

TEST(Io, RgbPngRoundTrip) {
  testing::ScratchDir dir("io");
  RgbImage img(7, 5);
  for (int y = 0; y < 5; ++y)
    for (int x = 0; x < 7; ++x)
      img.set(x, y, {static_cast<std::uint8_t>(x * 30), static_cast<std::uint8_t>(y * 50), 9});
  write_rgb(dir.path() / "i.png", img);
  EXPECT_EQ(read_rgb(dir.path() / "i.png"), img);
}

TEST(Io, BinarizesAtThreshold128) {
  testing::ScratchDir dir("io");
  Raster8 gray{4, 1, 1, {0, 127, 128, 255}};
  write_gray8(dir.path() / "g.png", gray);
  const auto m = read_mask(dir.path() / "g.png");
  EXPECT_FALSE(m.get(0, 0));
  EXPECT_FALSE(m.get(1, 0));
  EXPECT_TRUE(m.get(2, 0));
  EXPECT_TRUE(m.get(3, 0));
}

TEST(Io, CorruptFileRaisesIoError) {
  testing::ScratchDir dir("io");
  write_file_atomic(dir.path() / "bad.png", std::string_view("not a png"));
  EXPECT_THROW(read_mask(dir.path() / "bad.png"), IoError);
  EXPECT_THROW(read_mask(dir.path() / "missing.png"), IoError);
}

}  // namespace
}  // namespace occbench
