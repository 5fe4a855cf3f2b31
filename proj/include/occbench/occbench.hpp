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

// Umbrella header.

#ifndef OCCBENCH_OCCBENCH_HPP_
#define OCCBENCH_OCCBENCH_HPP_

#include "occbench/distance.hpp"
#include "occbench/error.hpp"
#include "occbench/image.hpp"
#include "occbench/io.hpp"
#include "occbench/mask.hpp"
#include "occbench/metrics.hpp"
#include "occbench/occlusion.hpp"
#include "occbench/oracle.hpp"
#include "occbench/parallel.hpp"
#include "occbench/prompt.hpp"
#include "occbench/protocol.hpp"
#include "occbench/rng.hpp"
#include "occbench/synthetic.hpp"
#include "occbench/transform.hpp"
#include "occbench/harness/aggregate.hpp"
#include "occbench/harness/config.hpp"
#include "occbench/harness/dataset.hpp"
#include "occbench/harness/evaluate.hpp"
#include "occbench/harness/generate.hpp"
#include "occbench/harness/grid.hpp"
#include "occbench/harness/manifest.hpp"
#include "occbench/harness/pipeline.hpp"
#include "occbench/harness/report.hpp"
#include "occbench/harness/simulate.hpp"

#endif  // OCCBENCH_OCCBENCH_HPP_
