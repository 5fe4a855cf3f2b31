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

// Shared test helpers: random masks, scratch directories and brute-force
// reference implementations that share no code with the library kernels.

#ifndef OCCBENCH_TESTS_TEST_SUPPORT_HPP_
#define OCCBENCH_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <unistd.h>
#include <sstream>
#include <string>
#include <vector>

#include "occbench/mask.hpp"

namespace occbench::testing {

// Foreground with probability `density`.
inline BinaryMask random_mask(std::mt19937_64& rng, int w, int h, double density) {
  std::bernoulli_distribution fg(density);
  BinaryMask m(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) m.set(x, y, fg(rng));
  return m;
}

inline BinaryMask random_mask(std::mt19937_64& rng, int max_side) {
  std::uniform_int_distribution<int> side(1, max_side);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  const int w = side(rng), h = side(rng);
  return random_mask(rng, w, h, density(rng));
}

inline BinaryMask random_nonempty_mask(std::mt19937_64& rng, int max_side) {
  while (true) {
    auto m = random_mask(rng, max_side);
    for (int y = 0; y < m.height(); ++y)
      for (int x = 0; x < m.width(); ++x)
        if (m.get(x, y)) return m;
  }
}

inline std::int64_t count_fg(const BinaryMask& m) {
  std::int64_t n = 0;
  for (int y = 0; y < m.height(); ++y)
    for (int x = 0; x < m.width(); ++x) n += m.get(x, y) ? 1 : 0;
  return n;
}

inline bool fg_or_false(const BinaryMask& m, int x, int y) {
  return x >= 0 && y >= 0 && x < m.width() && y < m.height() && m.get(x, y);
}

// Distance from each foreground pixel to the nearest pixel that is either
// background or lies in the one-pixel ring outside the image.
inline std::vector<double> brute_distance_to_boundary(const BinaryMask& m) {
  std::vector<double> out(static_cast<std::size_t>(m.width()) * m.height(), 0.0);
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (!m.get(x, y)) continue;
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (int v = -1; v <= m.height(); ++v) {
        for (int u = -1; u <= m.width(); ++u) {
          if (fg_or_false(m, u, v)) continue;
          const std::int64_t dx = u - x, dy = v - y;
          best = std::min(best, dx * dx + dy * dy);
        }
      }
      out[static_cast<std::size_t>(y) * m.width() + x] = std::sqrt(static_cast<double>(best));
    }
  }
  return out;
}

inline std::vector<std::pair<int, int>> brute_boundary(const BinaryMask& m) {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < m.height(); ++y) {
    for (int x = 0; x < m.width(); ++x) {
      if (!m.get(x, y)) continue;
      if (!fg_or_false(m, x - 1, y) || !fg_or_false(m, x + 1, y) || !fg_or_false(m, x, y - 1) ||
          !fg_or_false(m, x, y + 1)) {
        out.emplace_back(x, y);
      }
    }
  }
  return out;
}

inline double brute_dice(const BinaryMask& a, const BinaryMask& b) {
  std::int64_t na = 0, nb = 0, both = 0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      na += a.get(x, y);
      nb += b.get(x, y);
      both += a.get(x, y) && b.get(x, y);
    }
  }
  if (na + nb == 0) return 1.0;
  return 2.0 * static_cast<double>(both) / static_cast<double>(na + nb);
}

// Smallest value whose cumulative rank reaches 95% of n.
inline double brute_p95(std::vector<double> d) {
  std::sort(d.begin(), d.end());
  const std::size_t n = d.size();
  for (std::size_t k = 1; k <= n; ++k) {
    if (100 * k >= 95 * n) return d[k - 1];
  }
  return d.back();
}

inline double brute_hd95(const BinaryMask& a, const BinaryMask& b) {
  const auto ba = brute_boundary(a), bb = brute_boundary(b);
  if (ba.empty() && bb.empty()) return 0.0;
  if (ba.empty() || bb.empty()) {
    return std::sqrt(static_cast<double>(a.width() * a.width() + a.height() * a.height()));
  }
  auto directed = [](const auto& from, const auto& to) {
    std::vector<double> d;
    for (auto [x, y] : from) {
      double best = std::numeric_limits<double>::infinity();
      for (auto [u, v] : to) best = std::min(best, std::hypot(double(u - x), double(v - y)));
      d.push_back(best);
    }
    return d;
  };
  return std::max(brute_p95(directed(ba, bb)), brute_p95(directed(bb, ba)));
}

// Fresh scratch directory under the system temp dir, removed on scope exit.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("occbench_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Every regular file under `root`, keyed by relative path, with contents.
inline std::vector<std::pair<std::string, std::string>> snapshot_tree(
    const std::filesystem::path& root) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) {
      out.emplace_back(std::filesystem::relative(e.path(), root).generic_string(), slurp(e.path()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace occbench::testing

#endif  // OCCBENCH_TESTS_TEST_SUPPORT_HPP_
