// Copyright 2026 The bihole-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bihole/graph.hpp"

namespace bihole {

struct BenchOptions {
  std::string suite;  // "bihole", "color" or "coupon"
  std::uint32_t seeds = 10;
  std::uint64_t base_seed = 1;
  Vertex n = 200;
  std::optional<double> delta;  // bihole/color: p = delta / n; coupon: T threshold
  std::optional<double> p;
  double epsilon = 0.5;
  std::uint32_t retries = 3;
  std::uint32_t q = 20;
  std::uint64_t trials = 100000;
  unsigned threads = 0;  // 0: BIHOLE_LAB_THREADS or hardware concurrency
  bool include_timing = false;
};

/// Per-seed rows plus their aggregate. The aggregate is recomputable from
/// the rows: success fraction over rows[i]["success"] and min / median /
/// max over rows[i][metric].
struct BenchSummary {
  std::string suite;
  std::string metric;
  std::string threshold;  // human-readable pass rule
  std::vector<nlohmann::json> rows;
  double success_fraction = 0;
  double metric_min = 0;
  double metric_median = 0;
  double metric_max = 0;
  bool passed = false;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Trial i uses seed base_seed + i for both the graph and the algorithm
/// (their random streams are split by tag). Trials run concurrently; the
/// rows come back in seed order. Throws DomainError on bad options.
BenchSummary run_bench(const BenchOptions& options);

/// BIHOLE_LAB_THREADS if set and positive, else hardware concurrency (>= 1).
unsigned default_threads();

/// Runs task(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task);

}  // namespace bihole
