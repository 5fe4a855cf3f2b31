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

// Reference Clean and High DSC values and their rounded relative degradation
// from full-mask and visible-mask tables (surgical tool occlusion, box
// prompts), in dataset order CVC-300, CVC-ColonDB, ETIS.

#ifndef OCCBENCH_TESTS_DELTA_FIXTURES_HPP_
#define OCCBENCH_TESTS_DELTA_FIXTURES_HPP_

#include <array>
#include <string_view>

namespace occbench::testing {

struct DeltaCell {
  std::string_view table;
  std::string_view model;
  std::string_view dataset;
  double clean;
  double high;
  double printed_delta;
};

inline constexpr std::array<DeltaCell, 42> kDeltaCells{{
    {"full", "SAM", "CVC-300", 0.925, 0.583, 37.0},
    {"full", "SAM", "CVC-ColonDB", 0.884, 0.567, 35.9},
    {"full", "SAM", "ETIS", 0.910, 0.552, 39.4},
    {"full", "SAM 2", "CVC-300", 0.913, 0.692, 24.2},
    {"full", "SAM 2", "CVC-ColonDB", 0.907, 0.651, 28.2},
    {"full", "SAM 2", "ETIS", 0.907, 0.621, 31.6},
    {"full", "SAM 3", "CVC-300", 0.950, 0.618, 35.0},
    {"full", "SAM 3", "CVC-ColonDB", 0.928, 0.631, 32.0},
    {"full", "SAM 3", "ETIS", 0.935, 0.603, 35.6},
    {"full", "MedSAM", "CVC-300", 0.742, 0.640, 13.8},
    {"full", "MedSAM", "CVC-ColonDB", 0.709, 0.607, 14.5},
    {"full", "MedSAM", "ETIS", 0.778, 0.588, 24.5},
    {"full", "SAM-Med2D", "CVC-300", 0.903, 0.554, 38.7},
    {"full", "SAM-Med2D", "CVC-ColonDB", 0.854, 0.545, 36.2},
    {"full", "SAM-Med2D", "ETIS", 0.837, 0.502, 40.0},
    {"full", "MedSAM2", "CVC-300", 0.930, 0.784, 15.7},
    {"full", "MedSAM2", "CVC-ColonDB", 0.912, 0.758, 17.0},
    {"full", "MedSAM2", "ETIS", 0.907, 0.766, 15.6},
    {"full", "MedSAM3", "CVC-300", 0.937, 0.675, 27.9},
    {"full", "MedSAM3", "CVC-ColonDB", 0.908, 0.659, 27.4},
    {"full", "MedSAM3", "ETIS", 0.918, 0.680, 26.0},
    {"visible", "SAM", "CVC-300", 0.925, 0.388, 58.1},
    {"visible", "SAM", "CVC-ColonDB", 0.884, 0.505, 42.9},
    {"visible", "SAM", "ETIS", 0.910, 0.554, 39.1},
    {"visible", "SAM 2", "CVC-300", 0.913, 0.662, 27.5},
    {"visible", "SAM 2", "CVC-ColonDB", 0.907, 0.730, 19.5},
    {"visible", "SAM 2", "ETIS", 0.907, 0.725, 20.1},
    {"visible", "SAM 3", "CVC-300", 0.950, 0.724, 23.8},
    {"visible", "SAM 3", "CVC-ColonDB", 0.928, 0.748, 19.3},
    {"visible", "SAM 3", "ETIS", 0.935, 0.801, 14.3},
    {"visible", "MedSAM", "CVC-300", 0.742, 0.302, 59.3},
    {"visible", "MedSAM", "CVC-ColonDB", 0.709, 0.281, 60.4},
    {"visible", "MedSAM", "ETIS", 0.778, 0.395, 49.2},
    {"visible", "SAM-Med2D", "CVC-300", 0.903, 0.345, 61.8},
    {"visible", "SAM-Med2D", "CVC-ColonDB", 0.854, 0.385, 54.9},
    {"visible", "SAM-Med2D", "ETIS", 0.837, 0.491, 41.3},
    {"visible", "MedSAM2", "CVC-300", 0.930, 0.687, 26.1},
    {"visible", "MedSAM2", "CVC-ColonDB", 0.912, 0.586, 35.7},
    {"visible", "MedSAM2", "ETIS", 0.907, 0.638, 29.7},
    {"visible", "MedSAM3", "CVC-300", 0.937, 0.661, 29.4},
    {"visible", "MedSAM3", "CVC-ColonDB", 0.908, 0.723, 20.3},
    {"visible", "MedSAM3", "ETIS", 0.918, 0.743, 19.1},
}};

}  // namespace occbench::testing

#endif  // OCCBENCH_TESTS_DELTA_FIXTURES_HPP_
