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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "occbench/error.hpp"
#include "occbench/occlusion.hpp"
#include "occbench/synthetic.hpp"
#include "test_support.hpp"

namespace occbench {
namespace {

RgbImage gray_image(Dims d) { return RgbImage(d, {120, 80, 60}); }

BinaryMask disc(Dims d, int cx, int cy, double r) {
  return ellipse_mask(d, cx, cy, r, r, 0.0);
}

void expect_same_sample(const OcclusionSample& a, const OcclusionSample& b) {
  EXPECT_EQ(a.image, b.image);
  EXPECT_EQ(a.occluder, b.occluder);
  EXPECT_EQ(a.full, b.full);
  EXPECT_EQ(a.effective, b.effective);
  EXPECT_EQ(a.ratio, b.ratio);
  EXPECT_EQ(a.attempts_used, b.attempts_used);
  EXPECT_EQ(a.out_of_bin, b.out_of_bin);
}

TEST(SeverityBin, Ranges) {
  const auto low = SeverityBin::of(Severity::kLow);
  const auto med = SeverityBin::of(Severity::kMedium);
  const auto high = SeverityBin::of(Severity::kHigh);
  const auto clean = SeverityBin::of(Severity::kClean);
  EXPECT_EQ(low.r_min, 0.0);
  EXPECT_EQ(low.r_max, 0.2);
  EXPECT_EQ(med.r_min, 0.2);
  EXPECT_EQ(med.r_max, 0.4);
  EXPECT_EQ(high.r_min, 0.4);
  EXPECT_EQ(high.r_max, 0.6);
  EXPECT_TRUE(clean.is_clean());
  EXPECT_EQ(clean.r_min, 0.0);
  EXPECT_EQ(clean.r_max, 0.0);
}

TEST(SeverityBin, AcceptanceInequalities) {
  const auto med = SeverityBin::of(Severity::kMedium);
  EXPECT_TRUE(tool_ratio_accepted(0.2, med));
  EXPECT_FALSE(cutout_ratio_accepted(0.2, med));
  EXPECT_TRUE(tool_ratio_accepted(0.4, med));
  EXPECT_TRUE(cutout_ratio_accepted(0.4, med));
  EXPECT_FALSE(tool_ratio_accepted(0.41, med));
  // Zero overlap is never an occlusion, even for the low bin.
  EXPECT_FALSE(tool_ratio_accepted(0.0, SeverityBin::of(Severity::kLow)));
}

TEST(OcclusionRatio, Examples) {
  const auto target = fill_box({40, 40}, {0, 0, 19, 9});  // 200 px
  const auto occ = fill_box({40, 40}, {0, 0, 4, 9});      // covers 50
  EXPECT_EQ(occlusion_ratio(target, occ), 0.25);
  EXPECT_EQ(occlusion_ratio(target, fill_box({40, 40}, {30, 30, 39, 39})), 0.0);
  EXPECT_EQ(occlusion_ratio(target, BinaryMask(40, 40, true)), 1.0);
  EXPECT_THROW(occlusion_ratio(BinaryMask(4, 4), BinaryMask(4, 4)), EmptyMaskError);
}

TEST(ToolOcclusion, LowBinOverlapOnThousandPixelTarget) {
  const Dims d{100, 100};
  const auto target = fill_box(d, {30, 30, 69, 54});  // 40 x 25 = 1000 px
  ASSERT_EQ(area(target), 1000);
  const auto tools = make_synthetic_tools(1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    try {
      const auto s = generate_tool_occlusion(gray_image(d), target,
                                             SeverityBin::of(Severity::kLow), tools, seed);
      EXPECT_GT(s.overlap_px, 0);
      EXPECT_LE(s.overlap_px, 200);
      EXPECT_GT(s.ratio, 0.0);
      EXPECT_LE(s.ratio, 0.2);
    } catch (const GenerationExhaustedError&) {
    }
  }
}

TEST(ToolOcclusion, DeterministicForSeed) {
  const Dims d{96, 96};
  const auto target = disc(d, 48, 48, 18);
  const auto tools = make_synthetic_tools(3);
  const auto bin = SeverityBin::of(Severity::kMedium);
  const auto a = generate_tool_occlusion(gray_image(d), target, bin, tools, 77);
  const auto b = generate_tool_occlusion(gray_image(d), target, bin, tools, 77);
  expect_same_sample(a, b);
  EXPECT_EQ(a.tool->tool_index, b.tool->tool_index);
  EXPECT_EQ(a.tool->scale, b.tool->scale);
  EXPECT_EQ(a.tool->rotation_deg, b.tool->rotation_deg);
}

TEST(ToolOcclusion, OnePixelToolCannotReachHighBin) {
  const Dims d{120, 120};
  const auto target = fill_box(d, {10, 10, 109, 109});  // 10 000 px
  ASSERT_EQ(area(target), 10000);
  RgbImage rgb(1, 1, {200, 200, 200});
  BinaryMask mask(1, 1, true);
  const ToolLibrary lib{ToolInstance::from_frame(rgb, mask, "dot")};
  try {
    generate_tool_occlusion(gray_image(d), target, SeverityBin::of(Severity::kHigh), lib, 5);
    FAIL() << "expected exhaustion";
  } catch (const GenerationExhaustedError& e) {
    EXPECT_EQ(e.attempts_used(), 50);
  }
}

TEST(ToolOcclusion, StoredPlacementReRendersOccluderAndImage) {
  const Dims d{128, 128};
  const auto sources = make_synthetic_sources({8, 128, 128, 12, 26}, 9);
  const auto tools = make_synthetic_tools(9);
  for (const auto& src : sources) {
    for (auto sev : {Severity::kLow, Severity::kMedium, Severity::kHigh}) {
      OcclusionSample s;
      try {
        s = generate_tool_occlusion(src.image, src.mask, SeverityBin::of(sev), tools, 1000 + area(src.mask));
      } catch (const GenerationExhaustedError&) {
        continue;
      }
      const auto& p = *s.tool;
      EXPECT_GE(p.scale, 0.8);
      EXPECT_LT(p.scale, 1.0);
      EXPECT_GE(p.rotation_deg, -45.0);
      EXPECT_LT(p.rotation_deg, 45.0);
      const auto box = bounding_box(src.mask);
      EXPECT_LE(std::abs(p.offset.x), box.width() / 4);
      EXPECT_LE(std::abs(p.offset.y), box.height() / 4);
      const auto r = render_tool(d, tools[p.tool_index], p.scale, p.rotation_deg, p.position);
      EXPECT_EQ(r.mask, s.occluder);
      for (int y = 0; y < d.height; ++y)
        for (int x = 0; x < d.width; ++x)
          ASSERT_EQ(s.image.get(x, y), s.occluder.get(x, y) ? r.rgb.get(x, y) : src.image.get(x, y));
    }
  }
}

TEST(ToolOcclusion, RejectsBadInputs) {
  const Dims d{32, 32};
  const auto target = disc(d, 16, 16, 6);
  const auto tools = make_synthetic_tools(1);
  EXPECT_THROW(generate_tool_occlusion(gray_image(d), target, SeverityBin::of(Severity::kLow), {}, 1),
               InvalidInputError);
  EXPECT_THROW(
      generate_tool_occlusion(gray_image(d), BinaryMask(d), SeverityBin::of(Severity::kLow), tools, 1),
      EmptyMaskError);
  EXPECT_THROW(
      generate_tool_occlusion(gray_image(d), target, SeverityBin::of(Severity::kClean), tools, 1),
      InvalidInputError);
  EXPECT_THROW(generate_tool_occlusion(gray_image({31, 32}), target,
                                       SeverityBin::of(Severity::kLow), tools, 1),
               InvalidInputError);
}

TEST(Cutout, AreaArithmetic) {
  const auto [at, ac] = cutout_areas(1000, 0.3, 1.5);
  EXPECT_NEAR(at, 300.0, 1e-9);
  EXPECT_NEAR(ac, 450.0, 1e-9);
  const auto [h, w] = cutout_sides(400, 1.0);
  EXPECT_EQ(h, 20.0);
  EXPECT_EQ(w, 20.0);
  const auto [h2, w2] = cutout_resize(10, 10, true);
  EXPECT_EQ(h2, 13.0);
  EXPECT_EQ(w2, 13.0);
  const auto [h3, w3] = cutout_resize(10, 10, false);
  EXPECT_EQ(h3, 7.0);
  EXPECT_EQ(w3, 7.0);
}

TEST(Cutout, RectangleMaskRoundsSides) {
  const auto m = rectangle_mask({50, 50}, 9.6, 4.4, {25, 25});
  EXPECT_EQ(bounding_box(m).height(), 10);
  EXPECT_EQ(bounding_box(m).width(), 4);
  EXPECT_EQ(area(rectangle_mask({50, 50}, 0.1, 0.1, {25, 25})), 1);
}

TEST(Cutout, SamplesInBinOrFlaggedAndBlackFilled) {
  const auto sources = make_synthetic_sources({16, 96, 96, 8, 20}, 4);
  for (const auto& src : sources) {
    for (auto sev : {Severity::kLow, Severity::kMedium, Severity::kHigh}) {
      const auto bin = SeverityBin::of(sev);
      const auto s = generate_cutout_occlusion(src.image, src.mask, bin, 31 + area(src.mask));
      const auto& p = *s.cutout;
      EXPECT_GE(p.target_ratio, bin.r_min);
      EXPECT_LE(p.target_ratio, bin.r_max);
      EXPECT_GE(p.multiplier, 1.2);
      EXPECT_LE(p.multiplier, 1.8);
      EXPECT_GE(p.aspect, 0.5);
      EXPECT_LE(p.aspect, 2.0);
      EXPECT_NEAR(p.overlap_goal, p.target_area * p.target_ratio, 1e-9);
      EXPECT_EQ(s.ratio, occlusion_ratio(src.mask, s.occluder));
      if (!s.out_of_bin) {
        EXPECT_TRUE(cutout_ratio_accepted(s.ratio, bin)) << s.ratio;
      }
      EXPECT_EQ(s.effective, subtract(src.mask, s.occluder));
      const Rgb black{0, 0, 0};
      for (int y = 0; y < src.image.height(); ++y) {
        for (int x = 0; x < src.image.width(); ++x) {
          ASSERT_EQ(s.image.get(x, y), s.occluder.get(x, y) ? black : src.image.get(x, y));
        }
      }
    }
  }
}

TEST(Cutout, ExhaustionReturnsFlaggedSample) {
  // A one-pixel target can only be fully covered or missed: r is 0 or 1,
  // never inside the medium bin.
  const Dims d{20, 20};
  BinaryMask target(d);
  target.set(10, 10);
  const auto s = generate_cutout_occlusion(gray_image(d), target, SeverityBin::of(Severity::kMedium), 3);
  EXPECT_TRUE(s.out_of_bin);
  EXPECT_EQ(s.attempts_used, 50);
}

TEST(GenerateDataset, SixtyImagesTwoTypesThreeBins) {
  const auto sources = make_synthetic_sources({60, 128, 128, 12, 26}, 60);
  const auto tools = make_synthetic_tools(60);
  GenerationConfig config;
  const auto result = generate_dataset(config, sources, tools, 60);
  int clean = 0, occluded = 0;
  for (const auto& s : result.samples) (s.type == OcclusionType::kNone ? clean : occluded)++;
  EXPECT_EQ(clean, 60);
  EXPECT_EQ(occluded + static_cast<int>(result.report.skipped.size()), 360);
  int success = 0;
  for (const auto& [key, c] : result.report.counts) {
    if (key.first != OcclusionType::kNone) success += c.success;
  }
  EXPECT_EQ(success, occluded);

  // Ordering by (source, type, bin) with clean entry first.
  for (std::size_t i = 1; i < result.samples.size(); ++i) {
    const auto& a = result.samples[i - 1];
    const auto& b = result.samples[i];
    EXPECT_LE(std::tie(a.source_id, a.type, a.bin.label), std::tie(b.source_id, b.type, b.bin.label));
  }
}

TEST(GenerateDataset, CleanEntriesPassThrough) {
  const auto sources = make_synthetic_sources({3, 64, 64, 8, 14}, 2);
  GenerationConfig config;
  config.types = {OcclusionType::kCutout};
  const auto result = generate_dataset(config, sources, {}, 2);
  int clean = 0;
  for (const auto& s : result.samples) {
    if (s.type != OcclusionType::kNone) continue;
    ++clean;
    EXPECT_TRUE(is_empty(s.occluder));
    EXPECT_EQ(s.ratio, 0.0);
    EXPECT_EQ(s.effective, s.full);
    EXPECT_EQ(s.id, s.source_id + "-clean");
  }
  EXPECT_EQ(clean, 3);
}

TEST(GenerateDataset, EmptySourceListGivesEmptyReport) {
  const auto result = generate_dataset({}, {}, {}, 1);
  EXPECT_TRUE(result.samples.empty());
  EXPECT_TRUE(result.report.empty());
}

TEST(GenerateDataset, BadPairIsReportedAndBatchContinues) {
  auto sources = make_synthetic_sources({3, 64, 64, 8, 14}, 5);
  sources[1].mask = BinaryMask(sources[1].mask.dims());
  GenerationConfig config;
  config.types = {OcclusionType::kCutout};
  const auto result = generate_dataset(config, sources, {}, 5);
  ASSERT_EQ(result.report.ingestion_errors.size(), 1u);
  EXPECT_NE(result.report.ingestion_errors[0].find(sources[1].id), std::string::npos);
  EXPECT_EQ(result.samples.size(), 8u);
}

TEST(GenerateDataset, WorkerCountDoesNotChangeOutput) {
  const auto sources = make_synthetic_sources({12, 96, 96, 10, 20}, 12);
  const auto tools = make_synthetic_tools(12);
  GenerationConfig one, many;
  many.workers = 8;
  const auto a = generate_dataset(one, sources, tools, 12);
  const auto b = generate_dataset(many, sources, tools, 12);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].id, b.samples[i].id);
    expect_same_sample(a.samples[i], b.samples[i]);
  }
  EXPECT_EQ(a.report.counts, b.report.counts);
}

TEST(GenerateDataset, DifferentSeedsDiffer) {
  const auto sources = make_synthetic_sources({2, 96, 96, 10, 20}, 1);
  GenerationConfig config;
  config.types = {OcclusionType::kCutout};
  const auto a = generate_dataset(config, sources, {}, 1);
  const auto b = generate_dataset(config, sources, {}, 2);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.samples.size(); ++i) any_diff |= a.samples[i].occluder != b.samples[i].occluder;
  EXPECT_TRUE(any_diff);
}

}  // namespace
}  // namespace occbench
