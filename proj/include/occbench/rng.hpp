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

// Counter-based random streams. Every stream is keyed by a tuple (master
// seed plus string/integer labels), so a sample's draws depend only on its
// key, never on scheduling or on how many other samples were generated.
//
// Distributions are implemented here rather than through <random> so the
// sequence is identical across standard library implementations.

#ifndef OCCBENCH_RNG_HPP_
#define OCCBENCH_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace occbench {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Folds labels into a 64-bit stream key.
class StreamKey {
 public:
  explicit constexpr StreamKey(std::uint64_t master_seed) : key_(splitmix64(master_seed)) {}

  constexpr StreamKey& mix(std::uint64_t v) {
    key_ = splitmix64(key_ ^ splitmix64(v + 0x632be59bd9b4e019ULL));
    return *this;
  }
  constexpr StreamKey& mix(std::string_view s) { return mix(fnv1a(s) ^ s.size()); }

  constexpr std::uint64_t value() const { return key_; }

 private:
  std::uint64_t key_;
};

// Output i of the stream is splitmix64(key + i * golden), i.e. a pure
// function of (key, counter).
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) : key_(key) {}

  constexpr std::uint64_t next() {
    return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * counter_++);
  }

  // Uniform in [0, 1).
  constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  constexpr double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], unbiased.
  constexpr std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) return lo;
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t r = next();
    while (r >= limit) r = next();
    return lo + static_cast<std::int64_t>(r % range);
  }

  constexpr std::uint64_t key() const { return key_; }
  constexpr std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace occbench

#endif  // OCCBENCH_RNG_HPP_
