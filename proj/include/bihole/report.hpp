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
#include <optional>
#include <string>

#include <json.hpp>

#include "bihole/bihole.hpp"
#include "bihole/coloring.hpp"
#include "bihole/coupon.hpp"
#include "bihole/graph.hpp"

namespace bihole {

struct GraphDescriptor {
  Vertex left = 0;
  Vertex right = 0;
  std::uint64_t edges = 0;
  double avg_degree = 0;
  std::uint32_t max_degree = 0;
  std::string source;                 // file path or generator name
  std::optional<std::uint64_t> seed;  // generator seed, when generated
  std::optional<double> p;            // generator edge probability
};

GraphDescriptor describe_graph(const BipartiteGraph& g, std::string source);

/// Metrics of one run; only the fields of phases that executed are set.
struct TrialMetrics {
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> target;
  std::optional<std::uint32_t> attempts;
  std::optional<std::uint64_t> sampled_left;
  std::optional<std::uint64_t> surviving_right;
  std::optional<std::uint32_t> trimmed_per_side;
  std::optional<bool> heavy_trim;
  std::optional<bool> greedy_fallback;
  std::optional<std::string> phase_taken;
  std::optional<std::uint32_t> palette_size;
  std::optional<std::uint32_t> q;
  std::optional<std::uint32_t> residual_cap;
  std::optional<std::uint64_t> s_size;
  std::optional<std::uint64_t> s0_size;
  std::optional<std::uint32_t> max_residual_degree;
  std::optional<std::uint64_t> resample_count;
  std::optional<std::string> fallback_rung;
};

struct TrialReport {
  std::string algorithm;  // "find-bihole" or "color"
  GraphDescriptor graph;
  nlohmann::json params = nlohmann::json::object();
  std::string outcome;  // target_met, target_missed, colored, infeasible, failure
  TrialMetrics metrics;
  double wall_time_ms = 0;
};

TrialReport bihole_report(const GraphDescriptor& graph, const BiholeParams& params,
                          const BiholeResult& result, double wall_time_ms);

TrialReport coloring_report(const GraphDescriptor& graph, const ColoringParams& params,
                            const ColoringResult& result, double wall_time_ms);

nlohmann::json to_json(const GraphDescriptor& d);
nlohmann::json to_json(const CouponStats& s);

/// Timing is left out unless requested, so identical runs print identical
/// bytes.
nlohmann::json to_json(const TrialReport& r, bool include_timing = false);

/// Per-phase counts of a coloring run: |U_c| extrema, |S|, |S_0|, a_c,
/// candidate set sizes, |S_U|, resamples, attempt failures.
nlohmann::json trace_to_json(const ColoringTrace& trace);

/// Checks a report object against the documented schema. Returns an
/// error description, or nullopt when valid.
std::optional<std::string> validate_report(const nlohmann::json& report);

}  // namespace bihole
