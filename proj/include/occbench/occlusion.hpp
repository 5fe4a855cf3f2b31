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

// Severity-controlled synthetic occlusion.
//
// Two occluder families are supported:
//
//  * Tool paste: an instrument crop from a library is scaled, rotated and
//    hard-composited near the target centroid. Each attempt redraws the tool,
//    scale, rotation and offset; the first placement whose occlusion ratio
//    lands in the requested bin is kept. No fallback exists, so exhausting
//    the attempt budget is an error and the caller skips the item.
//
//  * Cutout: a black rectangle whose initial area is proportional to the
//    target area is placed near the centroid once, then grown (x1.3) or
//    shrunk (x0.7) until the ratio lands in the bin. After the budget is
//    spent the last rectangle is applied anyway and the sample is flagged
//    out-of-bin.
//
// The two acceptance tests differ on purpose: tool placements accept
// r_min <= r <= r_max (with r > 0), cutouts accept r_min < r <= r_max.

#ifndef OCCBENCH_OCCLUSION_HPP_
#define OCCBENCH_OCCLUSION_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "occbench/error.hpp"
#include "occbench/image.hpp"
#include "occbench/mask.hpp"
#include "occbench/parallel.hpp"
#include "occbench/rng.hpp"
#include "occbench/transform.hpp"

namespace occbench {

enum class Severity { kClean, kLow, kMedium, kHigh };

inline std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::kClean: return "clean";
    case Severity::kLow: return "low";
    case Severity::kMedium: return "medium";
    case Severity::kHigh: return "high";
  }
  return "?";
}

inline Severity parse_severity(std::string_view s) {
  if (s == "clean") return Severity::kClean;
  if (s == "low") return Severity::kLow;
  if (s == "medium" || s == "med") return Severity::kMedium;
  if (s == "high") return Severity::kHigh;
  throw InvalidInputError("unknown severity bin: " + std::string(s));
}

struct SeverityBin {
  Severity label = Severity::kClean;
  double r_min = 0.0;
  double r_max = 0.0;

  static SeverityBin of(Severity s) {
    switch (s) {
      case Severity::kClean: return {s, 0.0, 0.0};
      case Severity::kLow: return {s, 0.0, 0.2};
      case Severity::kMedium: return {s, 0.2, 0.4};
      case Severity::kHigh: return {s, 0.4, 0.6};
    }
    throw InvalidInputError("bad severity");
  }

  bool is_clean() const { return label == Severity::kClean; }

  friend bool operator==(const SeverityBin&, const SeverityBin&) = default;
};

enum class OcclusionType { kNone, kTool, kCutout };

inline std::string_view to_string(OcclusionType t) {
  switch (t) {
    case OcclusionType::kNone: return "none";
    case OcclusionType::kTool: return "tool";
    case OcclusionType::kCutout: return "cutout";
  }
  return "?";
}

inline OcclusionType parse_occlusion_type(std::string_view s) {
  if (s == "none") return OcclusionType::kNone;
  if (s == "tool") return OcclusionType::kTool;
  if (s == "cutout") return OcclusionType::kCutout;
  throw InvalidInputError("unknown occlusion type: " + std::string(s));
}

// Occluder-to-target acceptance tests.
inline bool tool_ratio_accepted(double r, const SeverityBin& bin) {
  return r > 0.0 && bin.r_min <= r && r <= bin.r_max;
}
inline bool cutout_ratio_accepted(double r, const SeverityBin& bin) {
  return bin.r_min < r && r <= bin.r_max;
}

// An instrument crop. `rgb` and `mask` share dimensions.
struct ToolInstance {
  RgbImage rgb;
  BinaryMask mask;
  std::string source_id;

  // Crops a full-frame tool raster to the tight box around its mask.
  static ToolInstance from_frame(const RgbImage& rgb, const BinaryMask& mask, std::string id) {
    if (rgb.dims() != mask.dims()) {
      throw InvalidInputError("tool " + id + ": rgb and mask dimensions differ");
    }
    if (is_empty(mask)) throw EmptyMaskError("tool " + id + ": empty mask");
    const auto box = bounding_box(mask);
    ToolInstance t{RgbImage(box.width(), box.height()), BinaryMask(box.width(), box.height()),
                   std::move(id)};
    for (int y = 0; y < box.height(); ++y) {
      for (int x = 0; x < box.width(); ++x) {
        t.rgb.set(x, y, rgb.get(x + box.x_min, y + box.y_min));
        t.mask.set(x, y, mask.get(x + box.x_min, y + box.y_min));
      }
    }
    return t;
  }
};

using ToolLibrary = std::vector<ToolInstance>;

struct ToolPlacement {
  std::size_t tool_index = 0;
  std::string tool_id;
  double scale = 1.0;
  double rotation_deg = 0.0;
  Point2D position;  // where the transformed tool canvas is centred
  Point2D offset;    // position - centroid(target)
};

struct CutoutParams {
  double target_ratio = 0.0;  // r*
  double multiplier = 1.0;    // A_c / A_t
  double target_area = 0.0;   // A_M
  double overlap_goal = 0.0;  // A_t
  double cutout_area = 0.0;   // A_c
  double aspect = 1.0;        // w / h at initialisation
  double height = 0.0;        // final h, unrounded
  double width = 0.0;         // final w, unrounded
  Point2D position;
  Point2D offset;
};

struct OcclusionSample {
  std::string id;
  std::string source_id;
  RgbImage image;  // I'
  BinaryMask occluder;
  BinaryMask full;
  BinaryMask effective;  // full \ occluder
  double ratio = 0.0;
  std::int64_t overlap_px = 0;
  std::int64_t target_px = 0;
  SeverityBin bin;
  OcclusionType type = OcclusionType::kNone;
  std::uint64_t seed = 0;
  int attempts_used = 0;
  bool out_of_bin = false;
  std::optional<ToolPlacement> tool;
  std::optional<CutoutParams> cutout;
};

inline constexpr int kDefaultMaxAttempts = 50;

inline double occlusion_ratio(const BinaryMask& target, const BinaryMask& occluder) {
  const auto t = area(target);
  if (t == 0) throw EmptyMaskError("occlusion_ratio: empty target");
  return static_cast<double>(overlap_area(target, occluder)) / static_cast<double>(t);
}

// Uniform integer offset in [-w/4, w/4] x [-h/4, h/4] of the target box.
inline Point2D sample_offset(CounterRng& rng, const BoundingBox& target_box) {
  const int rx = static_cast<int>(std::floor(0.25 * target_box.width()));
  const int ry = static_cast<int>(std::floor(0.25 * target_box.height()));
  const int dx = static_cast<int>(rng.uniform_int(-rx, rx));
  const int dy = static_cast<int>(rng.uniform_int(-ry, ry));
  return {dx, dy};
}

struct RenderedTool {
  BinaryMask mask;  // canvas-sized occluder
  RgbImage rgb;     // canvas-sized tool pixels (valid where mask is set)
};

// Re-renders a tool placement onto a canvas; deterministic in its inputs.
inline RenderedTool render_tool(Dims canvas, const ToolInstance& tool, double scale,
                                double rotation_deg, Point2D position) {
  auto grid = make_grid(tool.mask, scale, rotation_deg);
  auto mask = resample(tool.mask, grid);
  if (is_empty(mask)) throw DegenerateTransformError("tool " + tool.source_id + " vanished");
  auto rgb = resample(tool.rgb, grid);
  return {paste(canvas, mask, position), paste(canvas, rgb, position)};
}

namespace detail {

inline void finish_sample(OcclusionSample& s, const BinaryMask& target) {
  s.full = target;
  s.effective = subtract(target, s.occluder);
  s.overlap_px = overlap_area(target, s.occluder);
  s.target_px = area(target);
  s.ratio = static_cast<double>(s.overlap_px) / static_cast<double>(s.target_px);
}

inline void check_inputs(const RgbImage& image, const BinaryMask& target, const SeverityBin& bin) {
  if (image.dims() != target.dims()) {
    throw InvalidInputError("image and target mask dimensions differ");
  }
  if (is_empty(target)) throw EmptyMaskError("target mask is empty");
  if (bin.is_clean()) throw InvalidInputError("occlusion requested for the clean bin");
}

}  // namespace detail

inline OcclusionSample generate_tool_occlusion(const RgbImage& image, const BinaryMask& target,
                                               const SeverityBin& bin, const ToolLibrary& library,
                                               std::uint64_t seed,
                                               int max_attempts = kDefaultMaxAttempts) {
  detail::check_inputs(image, target, bin);
  if (library.empty()) throw InvalidInputError("tool library is empty");

  CounterRng rng(seed);
  const auto center = centroid(target);
  const auto box = bounding_box(target);
  const auto target_px = area(target);

  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    ToolPlacement placement;
    placement.tool_index =
        static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(library.size()) - 1));
    placement.scale = rng.uniform(0.8, 1.0);
    placement.rotation_deg = rng.uniform(-45.0, 45.0);
    placement.offset = sample_offset(rng, box);
    placement.position = {center.x + placement.offset.x, center.y + placement.offset.y};
    const auto& tool = library[placement.tool_index];
    placement.tool_id = tool.source_id;

    RenderedTool rendered;
    try {
      rendered = render_tool(target.dims(), tool, placement.scale, placement.rotation_deg,
                             placement.position);
    } catch (const DegenerateTransformError&) {
      continue;
    }
    const double r = static_cast<double>(overlap_area(target, rendered.mask)) /
                     static_cast<double>(target_px);
    if (!tool_ratio_accepted(r, bin)) continue;

    OcclusionSample s;
    s.image = image;
    composite(s.image, rendered.rgb, rendered.mask);
    s.occluder = std::move(rendered.mask);
    s.bin = bin;
    s.type = OcclusionType::kTool;
    s.seed = seed;
    s.attempts_used = attempt;
    s.tool = std::move(placement);
    detail::finish_sample(s, target);
    return s;
  }
  throw GenerationExhaustedError("tool occlusion: no placement in bin " +
                                     std::string(to_string(bin.label)) + " after " +
                                     std::to_string(max_attempts) + " attempts",
                                 max_attempts);
}

// A_t = A_M * r*, A_c = A_t * multiplier.
inline std::pair<double, double> cutout_areas(double target_area, double target_ratio,
                                              double multiplier) {
  const double overlap_goal = target_area * target_ratio;
  return {overlap_goal, overlap_goal * multiplier};
}

// h = sqrt(A_c / aspect), w = A_c / h.
inline std::pair<double, double> cutout_sides(double cutout_area, double aspect) {
  const double h = std::sqrt(cutout_area / aspect);
  return {h, cutout_area / h};
}

// Grow by 1.3 when the ratio is at or below the bin floor, otherwise shrink
// by 0.7.
inline std::pair<double, double> cutout_resize(double h, double w, bool grow) {
  const double f = grow ? 1.3 : 0.7;
  return {h * f, w * f};
}

// Axis-aligned rectangle of round(h) x round(w) pixels (at least 1x1)
// centred on `at`, clipped to the canvas.
inline BinaryMask rectangle_mask(Dims canvas, double h, double w, Point2D at) {
  const int rows = std::max(1, static_cast<int>(std::lround(h)));
  const int cols = std::max(1, static_cast<int>(std::lround(w)));
  const auto o = paste_origin({cols, rows}, at);
  return fill_box(canvas, {o.x, o.y, o.x + cols - 1, o.y + rows - 1});
}

inline OcclusionSample generate_cutout_occlusion(const RgbImage& image, const BinaryMask& target,
                                                 const SeverityBin& bin, std::uint64_t seed,
                                                 int max_attempts = kDefaultMaxAttempts) {
  detail::check_inputs(image, target, bin);
  CounterRng rng(seed);

  CutoutParams p;
  p.target_ratio = rng.uniform(bin.r_min, bin.r_max);
  const auto box = bounding_box(target);
  p.target_area = static_cast<double>(area(target));
  p.multiplier = rng.uniform(1.2, 1.8);
  std::tie(p.overlap_goal, p.cutout_area) = cutout_areas(p.target_area, p.target_ratio, p.multiplier);
  p.aspect = rng.uniform(0.5, 2.0);
  auto [h, w] = cutout_sides(p.cutout_area, p.aspect);
  const auto center = centroid(target);
  p.offset = sample_offset(rng, box);
  p.position = {center.x + p.offset.x, center.y + p.offset.y};

  const auto target_px = area(target);
  auto ratio_of = [&](const BinaryMask& m) {
    return static_cast<double>(overlap_area(target, m)) / static_cast<double>(target_px);
  };

  auto occluder = rectangle_mask(target.dims(), h, w, p.position);
  double r = ratio_of(occluder);
  int attempts = 0;
  bool accepted = false;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    attempts = attempt;
    if (cutout_ratio_accepted(r, bin)) {
      accepted = true;
      break;
    }
    std::tie(h, w) = cutout_resize(h, w, r <= bin.r_min);
    occluder = rectangle_mask(target.dims(), h, w, p.position);
    r = ratio_of(occluder);
  }
  p.height = h;
  p.width = w;

  OcclusionSample s;
  s.image = image;
  fill_masked(s.image, occluder, {0, 0, 0});
  s.occluder = std::move(occluder);
  s.bin = bin;
  s.type = OcclusionType::kCutout;
  s.seed = seed;
  s.attempts_used = attempts;
  s.cutout = p;
  detail::finish_sample(s, target);
  s.out_of_bin = !accepted && !cutout_ratio_accepted(s.ratio, bin);
  return s;
}

// ---------------------------------------------------------------------------
// Dataset-level generation.

struct GenerationConfig {
  std::vector<OcclusionType> types{OcclusionType::kTool, OcclusionType::kCutout};
  std::vector<Severity> bins{Severity::kLow, Severity::kMedium, Severity::kHigh};
  bool include_clean = true;
  int max_attempts = kDefaultMaxAttempts;
  int workers = 1;
};

struct SourceSample {
  std::string id;
  RgbImage image;
  BinaryMask mask;
};

struct SkippedItem {
  std::string source_id;
  OcclusionType type = OcclusionType::kNone;
  Severity bin = Severity::kClean;
  int attempts_used = 0;
  std::string reason;
};

struct BinCounts {
  int success = 0;
  int skipped = 0;
  int out_of_bin = 0;

  friend bool operator==(const BinCounts&, const BinCounts&) = default;
};

struct GenerationReport {
  // Keyed by (type, bin).
  std::map<std::pair<OcclusionType, Severity>, BinCounts> counts;
  std::vector<SkippedItem> skipped;
  std::vector<std::string> ingestion_errors;

  bool empty() const { return counts.empty() && skipped.empty() && ingestion_errors.empty(); }
};

inline std::string sample_id(std::string_view source_id, OcclusionType type, Severity bin) {
  if (type == OcclusionType::kNone) return std::string(source_id) + "-clean";
  return std::string(source_id) + "-" + std::string(to_string(type)) + "-" +
         std::string(to_string(bin));
}

inline std::uint64_t sample_stream_key(std::uint64_t master_seed, std::string_view source_id,
                                       OcclusionType type, Severity bin) {
  return StreamKey(master_seed)
      .mix(source_id)
      .mix(to_string(type))
      .mix(to_string(bin))
      .value();
}

inline OcclusionSample clean_sample(const SourceSample& src, std::uint64_t master_seed) {
  OcclusionSample s;
  s.id = sample_id(src.id, OcclusionType::kNone, Severity::kClean);
  s.source_id = src.id;
  s.image = src.image;
  s.occluder = BinaryMask(src.mask.dims());
  s.bin = SeverityBin::of(Severity::kClean);
  s.type = OcclusionType::kNone;
  s.seed = sample_stream_key(master_seed, src.id, OcclusionType::kNone, Severity::kClean);
  detail::finish_sample(s, src.mask);
  return s;
}

using GenerationOutcome = std::variant<OcclusionSample, SkippedItem>;

// All outcomes for one source in (type, bin) order, clean entry first.
inline std::vector<GenerationOutcome> generate_for_source(const GenerationConfig& config,
                                                          const SourceSample& src,
                                                          const ToolLibrary& library,
                                                          std::uint64_t master_seed) {
  if (is_empty(src.mask)) throw EmptyMaskError("source " + src.id + ": empty ground truth");
  if (src.image.dims() != src.mask.dims()) {
    throw InvalidInputError("source " + src.id + ": image and mask dimensions differ");
  }
  std::vector<GenerationOutcome> out;
  if (config.include_clean) out.emplace_back(clean_sample(src, master_seed));

  auto types = config.types;
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  auto bins = config.bins;
  std::sort(bins.begin(), bins.end());
  bins.erase(std::unique(bins.begin(), bins.end()), bins.end());

  for (auto type : types) {
    if (type == OcclusionType::kNone) continue;
    for (auto b : bins) {
      if (b == Severity::kClean) continue;
      const auto bin = SeverityBin::of(b);
      const auto key = sample_stream_key(master_seed, src.id, type, b);
      try {
        OcclusionSample s =
            type == OcclusionType::kTool
                ? generate_tool_occlusion(src.image, src.mask, bin, library, key,
                                          config.max_attempts)
                : generate_cutout_occlusion(src.image, src.mask, bin, key, config.max_attempts);
        s.id = sample_id(src.id, type, b);
        s.source_id = src.id;
        out.emplace_back(std::move(s));
      } catch (const GenerationExhaustedError& e) {
        out.emplace_back(SkippedItem{src.id, type, b, e.attempts_used(), e.what()});
      } catch (const InvalidInputError& e) {
        out.emplace_back(SkippedItem{src.id, type, b, 0, e.what()});
      }
    }
  }
  return out;
}

inline void tally(GenerationReport& report, const GenerationOutcome& outcome) {
  if (const auto* s = std::get_if<OcclusionSample>(&outcome)) {
    auto& c = report.counts[{s->type, s->bin.label}];
    ++c.success;
    if (s->out_of_bin) ++c.out_of_bin;
  } else {
    const auto& k = std::get<SkippedItem>(outcome);
    ++report.counts[{k.type, k.bin}].skipped;
    report.skipped.push_back(k);
  }
}

struct GenerationResult {
  std::vector<OcclusionSample> samples;  // sorted by (source id, type, bin)
  GenerationReport report;
};

inline GenerationResult generate_dataset(const GenerationConfig& config,
                                         const std::vector<SourceSample>& sources,
                                         const ToolLibrary& library, std::uint64_t master_seed) {
  std::vector<std::vector<GenerationOutcome>> per_source(sources.size());
  std::vector<std::string> errors(sources.size());
  parallel_for(sources.size(), config.workers, [&](std::size_t i) {
    try {
      per_source[i] = generate_for_source(config, sources[i], library, master_seed);
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });

  GenerationResult result;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (!errors[i].empty()) result.report.ingestion_errors.push_back(errors[i]);
    for (auto& o : per_source[i]) {
      tally(result.report, o);
      if (auto* s = std::get_if<OcclusionSample>(&o)) result.samples.push_back(std::move(*s));
    }
  }
  std::stable_sort(result.samples.begin(), result.samples.end(),
                   [](const OcclusionSample& a, const OcclusionSample& b) {
                     return std::tie(a.source_id, a.type, a.bin.label) <
                            std::tie(b.source_id, b.type, b.bin.label);
                   });
  std::stable_sort(result.report.skipped.begin(), result.report.skipped.end(),
                   [](const SkippedItem& a, const SkippedItem& b) {
                     return std::tie(a.source_id, a.type, a.bin) <
                            std::tie(b.source_id, b.type, b.bin);
                   });
  std::sort(result.report.ingestion_errors.begin(), result.report.ingestion_errors.end());
  return result;
}

}  // namespace occbench

#endif  // OCCBENCH_OCCLUSION_HPP_
