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

#include "bihole/report.hpp"

#include <algorithm>
#include <array>

namespace bihole {

using nlohmann::json;

GraphDescriptor describe_graph(const BipartiteGraph& g, std::string source) {
  GraphDescriptor d;
  d.left = g.left_count();
  d.right = g.right_count();
  d.edges = g.edge_count();
  d.avg_degree = g.left_count() == 0 ? 0.0 : average_degree(g).value();
  d.max_degree = max_degree(g);
  d.source = std::move(source);
  return d;
}

TrialReport bihole_report(const GraphDescriptor& graph, const BiholeParams& params,
                          const BiholeResult& result, double wall_time_ms) {
  TrialReport r;
  r.algorithm = "find-bihole";
  r.graph = graph;
  r.params = {{"epsilon", params.epsilon}, {"seed", params.seed.value}, {"retries", params.retries}};
  const BiholeReport& b = result.report;
  r.outcome = b.target_met ? "target_met" : "target_missed";
  r.metrics.t = b.t;
  r.metrics.target = b.target;
  r.metrics.attempts = b.attempts;
  r.metrics.greedy_fallback = b.greedy_fallback;
  if (!b.greedy_fallback) {
    r.metrics.sampled_left = b.sampled_left;
    r.metrics.surviving_right = b.surviving_right;
    r.metrics.trimmed_per_side = b.trimmed_per_side;
    r.metrics.heavy_trim = b.heavy_trim;
  }
  r.wall_time_ms = wall_time_ms;
  return r;
}

TrialReport coloring_report(const GraphDescriptor& graph, const ColoringParams& params,
                            const ColoringResult& result, double wall_time_ms) {
  TrialReport r;
  r.algorithm = "color";
  r.graph = graph;
  r.params = {{"epsilon", params.epsilon},
              {"seed", params.seed.value},
              {"retries", params.retries},
              {"resample_cap", params.resample_cap},
              {"stall_window", params.stall_window}};
  r.outcome = outcome_name(result.outcome);
  const ColoringTrace& t = result.trace;
  r.metrics.phase_taken = phase_name(t.phase_taken);
  if (result.outcome != Outcome::Infeasible) {
    if (result.coloring) r.metrics.palette_size = result.coloring->palette_size;
    r.metrics.attempts = t.attempts;
    if (t.q != 0) r.metrics.q = t.q;
    if (t.attempts > 0) {
      r.metrics.residual_cap = t.residual_cap;
      r.metrics.s_size = t.uncolored_S.size();
      r.metrics.s0_size = t.equalize_removed.size();
    }
    if (t.phase_taken == Phase::LargeS || t.resamples > 0) r.metrics.resample_count = t.resamples;
    if (t.phase_taken == Phase::LargeS) r.metrics.max_residual_degree = t.residual_max_degree;
    if (!t.fallback_rung.empty()) r.metrics.fallback_rung = t.fallback_rung;
  }
  r.wall_time_ms = wall_time_ms;
  return r;
}

json to_json(const GraphDescriptor& d) {
  json j = {{"n", d.left},
            {"left", d.left},
            {"right", d.right},
            {"edges", d.edges},
            {"avg_degree", d.avg_degree},
            {"max_degree", d.max_degree},
            {"source", d.source}};
  if (d.seed) j["seed"] = *d.seed;
  if (d.p) j["p"] = *d.p;
  return j;
}

json to_json(const CouponStats& s) {
  return {{"q", s.q},           {"delta", s.delta},   {"trials", s.trials},
          {"p_hat", s.p_hat},   {"mean_T", s.mean_T}, {"var_T", s.var_T}};
}

namespace {

template <class T>
void put(json& j, const char* key, const std::optional<T>& value) {
  if (value) j[key] = *value;
}

}  // namespace

json to_json(const TrialReport& r, bool include_timing) {
  json metrics = json::object();
  const TrialMetrics& m = r.metrics;
  put(metrics, "t", m.t);
  put(metrics, "target", m.target);
  put(metrics, "attempts", m.attempts);
  put(metrics, "sampled_left", m.sampled_left);
  put(metrics, "surviving_right", m.surviving_right);
  put(metrics, "trimmed_per_side", m.trimmed_per_side);
  put(metrics, "heavy_trim", m.heavy_trim);
  put(metrics, "greedy_fallback", m.greedy_fallback);
  put(metrics, "phase_taken", m.phase_taken);
  put(metrics, "palette_size", m.palette_size);
  put(metrics, "q", m.q);
  put(metrics, "residual_cap", m.residual_cap);
  put(metrics, "s_size", m.s_size);
  put(metrics, "s0_size", m.s0_size);
  put(metrics, "max_residual_degree", m.max_residual_degree);
  put(metrics, "resample_count", m.resample_count);
  put(metrics, "fallback_rung", m.fallback_rung);
  json j = {{"algorithm", r.algorithm},
            {"graph", to_json(r.graph)},
            {"params", r.params},
            {"outcome", r.outcome},
            {"metrics", std::move(metrics)}};
  if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

json trace_to_json(const ColoringTrace& t) {
  std::vector<std::size_t> candidate_sizes;
  for (const auto& c : t.candidates) candidate_sizes.push_back(c.size());
  json j = {{"max_degree", t.max_degree},
            {"q", t.q},
            {"residual_cap", t.residual_cap},
            {"phase_taken", phase_name(t.phase_taken)},
            {"attempts", t.attempts},
            {"left_class_min", t.left_class_min},
            {"left_class_max", t.left_class_max},
            {"s_size", t.uncolored_S.size()},
            {"s0_size", t.equalize_removed.size()},
            {"deficits", t.deficits},
            {"candidate_sizes", candidate_sizes},
            {"sampled_su_size", t.sampled_SU.size()},
            {"selected_su_size", t.selected_SU.size()},
            {"resamples", t.resamples},
            {"residual_max_degree", t.residual_max_degree},
            {"fallback_rung", t.fallback_rung},
            {"attempt_failures", t.attempt_failures}};
  if (t.star_color) j["star_color"] = *t.star_color;
  return j;
}

std::optional<std::string> validate_report(const json& r) {
  if (!r.is_object()) return "report is not an object";
  static const std::array<const char*, 5> kTop = {"algorithm", "graph", "params", "outcome",
                                                  "metrics"};
  for (const char* key : kTop)
    if (!r.contains(key)) return std::string("missing field '") + key + "'";
  for (const auto& [key, value] : r.items()) {
    if (std::find_if(kTop.begin(), kTop.end(), [&](const char* k) { return key == k; }) ==
            kTop.end() &&
        key != "wall_time_ms")
      return "unexpected field '" + key + "'";
  }
  if (!r["algorithm"].is_string()) return "algorithm must be a string";
  const std::string algorithm = r["algorithm"];
  if (algorithm != "find-bihole" && algorithm != "color") return "unknown algorithm " + algorithm;
  if (r.contains("wall_time_ms") && !(r["wall_time_ms"].is_number() && r["wall_time_ms"] >= 0))
    return "wall_time_ms must be a non-negative number";

  const json& g = r["graph"];
  if (!g.is_object()) return "graph must be an object";
  for (const char* key : {"n", "left", "right", "edges", "max_degree"})
    if (!g.contains(key) || !g[key].is_number_unsigned()) return std::string("graph.") + key;
  if (!g.contains("avg_degree") || !g["avg_degree"].is_number()) return "graph.avg_degree";
  if (!g.contains("source") || !g["source"].is_string()) return "graph.source";

  const json& p = r["params"];
  if (!p.is_object()) return "params must be an object";
  if (!p.contains("epsilon") || !p["epsilon"].is_number()) return "params.epsilon";
  if (!p.contains("seed") || !p["seed"].is_number_unsigned()) return "params.seed";

  const std::string outcome = r["outcome"].is_string() ? r["outcome"].get<std::string>() : "";
  const json& m = r["metrics"];
  if (!m.is_object()) return "metrics must be an object";
  if (algorithm == "find-bihole") {
    if (outcome != "target_met" && outcome != "target_missed") return "bad outcome " + outcome;
    for (const char* key : {"t", "target", "attempts"})
      if (!m.contains(key) || !m[key].is_number_unsigned()) return std::string("metrics.") + key;
    if ((outcome == "target_met") != (m["t"] >= m["target"])) return "outcome disagrees with t";
  } else {
    if (outcome != "colored" && outcome != "infeasible" && outcome != "failure")
      return "bad outcome " + outcome;
    if (!m.contains("phase_taken") || !m["phase_taken"].is_string()) return "metrics.phase_taken";
    if (outcome == "colored" &&
        (!m.contains("palette_size") || !m["palette_size"].is_number_unsigned()))
      return "metrics.palette_size";
    if (outcome == "infeasible" && m.contains("palette_size"))
      return "infeasible report carries a palette";
  }
  return std::nullopt;
}

}  // namespace bihole
