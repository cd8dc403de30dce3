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

#include "bihole/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "bihole/errors.hpp"
#include "bihole/oracle.hpp"
#include "bihole/simd/kernels.hpp"

namespace bihole {

std::string phase_name(Phase phase) {
  switch (phase) {
    case Phase::SmallS:
      return "small_s";
    case Phase::LargeS:
      return "large_s";
    case Phase::FallbackGlobal:
      return "fallback_global";
    case Phase::Infeasible:
      return "infeasible";
  }
  return "unknown";
}

std::string outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Colored:
      return "colored";
    case Outcome::Infeasible:
      return "infeasible";
    case Outcome::Failure:
      return "failure";
  }
  return "unknown";
}

std::uint32_t primary_palette_size(std::uint32_t max_degree, double epsilon) {
  const double d = max_degree;
  const double raw = (1.0 + epsilon / 2.0) * d / std::log(d);
  return static_cast<std::uint32_t>(std::max(1.0, std::ceil(raw - 1e-9)));
}

std::uint32_t residual_degree_cap(std::uint32_t max_degree) {
  const double d = max_degree;
  if (std::log(d) <= 1.0) return max_degree;
  return static_cast<std::uint32_t>(std::ceil(d / std::pow(std::log(d), 1.5) - 1e-9));
}

std::vector<Color> phase1_color_U(Vertex left_count, std::uint32_t q, Seed seed) {
  Rng rng(seed);
  std::vector<Color> colors(left_count);
  for (auto& c : colors) c = static_cast<Color>(rng.below(q));
  return colors;
}

RightColoring phase2_color_V(const BipartiteGraph& g, std::span<const Color> left_colors,
                             std::uint32_t q, Seed seed) {
  Rng rng(seed);
  RightColoring out;
  out.colors.assign(g.right_count(), kUncolored);
  out.available_lists.resize(g.right_count());
  std::vector<std::uint32_t> seen(q, 0);
  for (Vertex v = 0; v < g.right_count(); ++v) {
    const std::uint32_t stamp = v + 1;
    for (Vertex u : g.right_neighbors(v)) {
      if (left_colors[u] < q) seen[left_colors[u]] = stamp;
    }
    auto& list = out.available_lists[v];
    for (Color c = 0; c < q; ++c) {
      if (seen[c] != stamp) list.push_back(c);
    }
    if (list.empty()) {
      out.uncolored.push_back(v);
    } else {
      out.colors[v] = list[rng.below(list.size())];
    }
  }
  return out;
}

Equalization equalize(std::span<const Color> left_colors, std::vector<Color>& right_colors,
                      std::uint32_t q) {
  std::vector<std::uint64_t> left_size(q, 0), right_size(q, 0);
  for (Color c : left_colors)
    if (c < q) ++left_size[c];
  for (Color c : right_colors)
    if (c < q) ++right_size[c];

  std::vector<std::uint64_t> surplus(q, 0);
  for (Color c = 0; c < q; ++c) {
    if (right_size[c] > left_size[c]) surplus[c] = right_size[c] - left_size[c];
  }
  Equalization out;
  for (Vertex v = 0; v < right_colors.size(); ++v) {
    const Color c = right_colors[v];
    if (c < q && surplus[c] > 0) {
      --surplus[c];
      --right_size[c];
      right_colors[v] = kUncolored;
      out.removed.push_back(v);
    }
  }
  out.deficits.resize(q);
  for (Color c = 0; c < q; ++c) out.deficits[c] = left_size[c] - right_size[c];
  return out;
}

bool small_s_patch(const BipartiteGraph& g, std::vector<Color>& left_colors,
                   std::vector<Color>& right_colors, std::span<const Vertex> residual,
                   std::span<const std::uint64_t> deficits, Color star_color) {
  std::vector<std::uint32_t> in_residual(g.right_count(), 0);
  for (Vertex v : residual) in_residual[v] = 1;

  std::vector<std::uint64_t> need(deficits.begin(), deficits.end());
  std::vector<Vertex> recolor;
  for (Vertex u = 0; u < g.left_count(); ++u) {
    const Color c = left_colors[u];
    if (c >= need.size() || need[c] == 0) continue;
    if (simd::count_marked(g.left_neighbors(u), in_residual.data()) != 0) continue;
    --need[c];
    recolor.push_back(u);
  }
  if (std::any_of(need.begin(), need.end(), [](std::uint64_t x) { return x != 0; })) return false;

  for (Vertex u : recolor) left_colors[u] = star_color;
  for (Vertex v : residual) right_colors[v] = star_color;
  return true;
}

SelectResult select_SU(const BipartiteGraph& g, std::span<const Color> left_colors,
                       std::uint32_t q, std::span<const Vertex> residual,
                       std::span<const std::uint64_t> deficits, const SelectParams& params) {
  SelectResult out;
  const Vertex n = g.left_count();
  const double delta = params.max_degree;
  const std::uint32_t cap = residual_degree_cap(params.max_degree);

  std::vector<std::uint32_t> residual_pos(g.right_count(), UINT32_MAX);
  std::vector<std::uint32_t> in_residual(g.right_count(), 0);
  for (std::uint32_t i = 0; i < residual.size(); ++i) {
    residual_pos[residual[i]] = i;
    in_residual[residual[i]] = 1;
  }

  out.candidates.assign(q, {});
  std::vector<bool> candidate(n, false);
  for (Vertex u = 0; u < n; ++u) {
    const Color c = left_colors[u];
    if (c >= q) continue;
    if (simd::count_marked(g.left_neighbors(u), in_residual.data()) <= cap) {
      out.candidates[c].push_back(u);
      candidate[u] = true;
    }
  }

  std::uint64_t total_deficit = 0;
  for (std::uint64_t a : deficits) total_deficit += a;
  if (total_deficit == 0 && residual.empty()) {
    out.ok = true;
    return out;
  }

  const double log_d = std::log(delta);
  const double a_threshold = static_cast<double>(n) / (delta * std::pow(log_d, 7.0 / 8.0));
  for (Color c = 0; c < q; ++c) {
    if (deficits[c] > out.candidates[c].size()) {
      out.failure = "color " + std::to_string(c) + ": deficit " + std::to_string(deficits[c]) +
                    " exceeds " + std::to_string(out.candidates[c].size()) + " candidates";
      return out;
    }
    if (static_cast<double>(out.candidates[c].size()) <= a_threshold) {
      out.failure = "color " + std::to_string(c) + ": event A_c holds for every sample (" +
                    std::to_string(out.candidates[c].size()) + " candidates)";
      return out;
    }
  }

  const std::uint64_t threshold = bernoulli_threshold(std::min(1.0, 1.0 / std::pow(log_d, 1.75)));
  Rng rng(params.seed);
  std::vector<char> sampled(n, 0);
  for (Vertex u = 0; u < n; ++u) sampled[u] = rng.bernoulli(threshold);

  const std::uint64_t b_events = residual.size();
  std::vector<std::uint32_t> b_count(residual.size(), 0);
  std::vector<std::uint64_t> a_count(q, 0);
  for (std::uint32_t i = 0; i < residual.size(); ++i) {
    for (Vertex u : g.right_neighbors(residual[i])) b_count[i] += sampled[u];
  }
  for (Color c = 0; c < q; ++c) {
    for (Vertex u : out.candidates[c]) a_count[c] += sampled[u];
  }

  std::set<std::uint64_t> violated;
  auto refresh_b = [&](std::uint32_t i) {
    if (b_count[i] > cap) violated.insert(i); else violated.erase(i);
  };
  auto refresh_a = [&](Color c) {
    if (static_cast<double>(a_count[c]) <= a_threshold) violated.insert(b_events + c);
    else violated.erase(b_events + c);
  };
  for (std::uint32_t i = 0; i < residual.size(); ++i) refresh_b(i);
  for (Color c = 0; c < q; ++c) refresh_a(c);

  auto redraw = [&](Vertex u) {
    const char value = rng.bernoulli(threshold);
    if (value == sampled[u]) return;
    sampled[u] = value;
    for (Vertex v : g.left_neighbors(u)) {
      const std::uint32_t i = residual_pos[v];
      if (i == UINT32_MAX) continue;
      value ? ++b_count[i] : --b_count[i];
      refresh_b(i);
    }
    if (candidate[u]) {
      const Color c = left_colors[u];
      value ? ++a_count[c] : --a_count[c];
      refresh_a(c);
    }
  };

  const std::uint64_t resample_cap =
      params.resample_cap != 0 ? params.resample_cap : 1000ULL * (n + q);
  const std::uint64_t stall_window =
      params.stall_window != 0 ? params.stall_window : std::uint64_t{n} + q;
  std::size_t fewest = violated.size();
  std::uint64_t last_progress = 0;
  while (!violated.empty()) {
    if (out.resamples == resample_cap) {
      out.failure = "resample cap " + std::to_string(resample_cap) + " exhausted";
      return out;
    }
    if (violated.size() < fewest) {
      fewest = violated.size();
      last_progress = out.resamples;
    } else if (out.resamples - last_progress >= stall_window) {
      out.failure = "resampling stalled: " + std::to_string(fewest) + " events still violated after " +
                    std::to_string(stall_window) + " resamples without progress";
      return out;
    }
    const std::uint64_t event = *violated.begin();
    ++out.resamples;
    if (event < b_events) {
      for (Vertex u : g.right_neighbors(residual[event])) redraw(u);
    } else {
      const auto& members = out.candidates[event - b_events];
      for (Vertex u : members) redraw(u);
    }
  }

  for (Vertex u = 0; u < n; ++u)
    if (sampled[u]) out.sampled.push_back(u);
  for (Color c = 0; c < q; ++c) {
    std::uint64_t taken = 0;
    for (Vertex u : out.candidates[c]) {
      if (taken == deficits[c]) break;
      if (sampled[u]) {
        out.selected.push_back(u);
        ++taken;
      }
    }
    if (taken < deficits[c]) {
      out.failure = "color " + std::to_string(c) + ": only " + std::to_string(taken) +
                    " sampled candidates for deficit " + std::to_string(deficits[c]);
      return out;
    }
  }
  std::sort(out.selected.begin(), out.selected.end());
  // sum_c a_c = |S'| always holds, so no padding is ever needed.
  if (out.selected.size() != residual.size()) {
    out.failure = "selected " + std::to_string(out.selected.size()) + " vertices for a residual of " +
                  std::to_string(residual.size());
    return out;
  }
  out.ok = true;
  return out;
}

BalancedColoring greedy_matching_color(const BipartiteGraph& g, const Matching& matching,
                                       Color palette_offset) {
  if (!matching.perfect || matching.size() != g.left_count() || !g.balanced())
    throw InfeasibleError("greedy coloring needs a perfect complement matching");
  BalancedColoring out;
  out.left_colors.assign(g.left_count(), kUncolored);
  out.right_colors.assign(g.right_count(), kUncolored);
  std::vector<std::uint64_t> used;  // color - offset -> stamp
  std::uint64_t stamp = 0;
  auto mark = [&](Color c) {
    if (c == kUncolored) return;
    const std::size_t k = c - palette_offset;
    if (k >= used.size()) used.resize(k + 1, 0);
    used[k] = stamp;
  };
  for (const auto& [u, v] : matching.pairs) {
    ++stamp;
    for (Vertex w : g.left_neighbors(u)) mark(out.right_colors[w]);
    for (Vertex w : g.right_neighbors(v)) mark(out.left_colors[w]);
    std::size_t k = 0;
    while (k < used.size() && used[k] == stamp) ++k;
    out.left_colors[u] = out.right_colors[v] = palette_offset + static_cast<Color>(k);
  }
  out.palette_size = count_palette(out);
  return out;
}

BalancedColoring lemma_easy_color(const BipartiteGraph& g, Color palette_offset) {
  if (!g.balanced()) throw DomainError("lemma_easy_color: graph is not balanced");
  const std::uint64_t d = max_degree(g);
  if (g.left_count() < 2 * d)
    throw DomainError("lemma_easy_color: needs n >= 2 * max degree (n=" +
                      std::to_string(g.left_count()) + ", max degree=" + std::to_string(d) + ")");
  const Matching m = max_matching_complement(g);
  if (!m.perfect) throw InfeasibleError("complement has no perfect matching");
  return greedy_matching_color(g, m, palette_offset);
}

std::uint32_t count_palette(const BalancedColoring& coloring) {
  std::unordered_set<Color> colors;
  for (Color c : coloring.left_colors)
    if (c != kUncolored) colors.insert(c);
  for (Color c : coloring.right_colors)
    if (c != kUncolored) colors.insert(c);
  return static_cast<std::uint32_t>(colors.size());
}

bool verify_coloring(const BipartiteGraph& g, const BalancedColoring& coloring) {
  if (coloring.left_colors.size() != g.left_count() ||
      coloring.right_colors.size() != g.right_count())
    return false;
  std::unordered_map<Color, std::int64_t> balance;
  for (Color c : coloring.left_colors) {
    if (c == kUncolored) return false;
    ++balance[c];
  }
  for (Color c : coloring.right_colors) {
    if (c == kUncolored) return false;
    --balance[c];
  }
  for (const auto& [c, diff] : balance)
    if (diff != 0) return false;
  for (Vertex u = 0; u < g.left_count(); ++u) {
    for (Vertex v : g.left_neighbors(u))
      if (coloring.left_colors[u] == coloring.right_colors[v]) return false;
  }
  return true;
}

namespace {

// One run of the randomized pipeline. Fills `trace`; returns the coloring or
// leaves `failure` set.
std::optional<BalancedColoring> run_pipeline(const BipartiteGraph& g, std::uint32_t delta,
                                             std::uint32_t q, const ColoringParams& params,
                                             Seed seed, ColoringTrace& trace,
                                             std::string& failure) {
  const Vertex n = g.left_count();
  std::vector<Color> left = phase1_color_U(n, q, derive(seed, Stream::ColorLeft));
  {
    std::vector<std::uint64_t> sizes(q, 0);
    for (Color c : left) ++sizes[c];
    auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    trace.left_class_min = *lo;
    trace.left_class_max = *hi;
  }

  RightColoring rc = phase2_color_V(g, left, q, derive(seed, Stream::ColorRight));
  trace.available_lists = std::move(rc.available_lists);
  trace.uncolored_S = rc.uncolored;
  std::vector<Color> right = std::move(rc.colors);

  Equalization eq = equalize(left, right, q);
  trace.equalize_removed = eq.removed;
  trace.deficits = eq.deficits;

  std::vector<Vertex> residual = rc.uncolored;
  residual.insert(residual.end(), eq.removed.begin(), eq.removed.end());
  std::sort(residual.begin(), residual.end());

  const double small_limit = std::floor(static_cast<double>(n) / (double(delta) * delta));
  if (static_cast<double>(rc.uncolored.size()) <= small_limit) {
    trace.phase_taken = Phase::SmallS;
    trace.star_color = q;
    if (!small_s_patch(g, left, right, residual, eq.deficits, q)) {
      failure = "small-S patch: too few left vertices avoid the uncolored set";
      return std::nullopt;
    }
    BalancedColoring out{std::move(left), std::move(right), 0};
    out.palette_size = count_palette(out);
    return out;
  }

  trace.phase_taken = Phase::LargeS;
  trace.star_color.reset();
  SelectParams sp{delta, params.resample_cap, derive(seed, Stream::SelectSU), params.stall_window};
  SelectResult sel = select_SU(g, left, q, residual, eq.deficits, sp);
  trace.candidates = std::move(sel.candidates);
  trace.sampled_SU = std::move(sel.sampled);
  trace.selected_SU = sel.selected;
  trace.resamples += sel.resamples;
  if (!sel.ok) {
    failure = "select S_U: " + sel.failure;
    return std::nullopt;
  }

  InducedGraph sub = induced(g, sel.selected, residual);
  trace.residual_max_degree = max_degree(sub.graph);
  if (trace.residual_max_degree > trace.residual_cap) {
    failure = "residual graph max degree " + std::to_string(trace.residual_max_degree) +
              " exceeds d* = " + std::to_string(trace.residual_cap);
    return std::nullopt;
  }
  if (sub.graph.left_count() < 2 * std::uint64_t{trace.residual_max_degree}) {
    failure = "residual graph has " + std::to_string(sub.graph.left_count()) +
              " vertices per side, below twice its max degree";
    return std::nullopt;
  }
  BalancedColoring rest;
  try {
    rest = lemma_easy_color(sub.graph, q + 1);
  } catch (const InfeasibleError& e) {
    failure = std::string("residual coloring: ") + e.what();
    return std::nullopt;
  }
  for (std::size_t i = 0; i < sub.left_map.size(); ++i) left[sub.left_map[i]] = rest.left_colors[i];
  for (std::size_t j = 0; j < sub.right_map.size(); ++j)
    right[sub.right_map[j]] = rest.right_colors[j];
  BalancedColoring out{std::move(left), std::move(right), 0};
  out.palette_size = count_palette(out);
  return out;
}

BalancedColoring global_fallback(const BipartiteGraph& g, const Matching& matching,
                                 std::uint32_t delta, ColoringTrace& trace) {
  trace.phase_taken = Phase::FallbackGlobal;
  if (g.left_count() >= 2 * std::uint64_t{delta}) {
    trace.fallback_rung = "lemma";
    return greedy_matching_color(g, matching, 0);
  }
  if (g.left_count() <= kChiBExactCap) {
    trace.fallback_rung = "exhaustive";
    OracleResult exact = chi_b_exact(g);
    if (exact.coloring) return *exact.coloring;
  }
  trace.fallback_rung = "greedy-matching";
  return greedy_matching_color(g, matching, 0);
}

}  // namespace

ColoringResult color_balanced(const BipartiteGraph& g, const ColoringParams& params) {
  if (!g.balanced()) throw DomainError("color_balanced: graph is not balanced");
  if (g.left_count() == 0) throw DomainError("color_balanced: graph is empty");
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
    throw DomainError("color_balanced: epsilon must lie in (0, 1)");

  ColoringResult result;
  ColoringTrace& trace = result.trace;
  const Matching matching = max_matching_complement(g);
  if (!matching.perfect) {
    result.outcome = Outcome::Infeasible;
    trace.phase_taken = Phase::Infeasible;
    result.message = "complement has no perfect matching (maximum " +
                     std::to_string(matching.size()) + ")";
    return result;
  }

  const std::uint32_t delta = max_degree(g);
  trace.max_degree = delta;
  const bool tiny_degree = delta == 0 || std::log(double(delta)) <= 1.0;
  const std::uint32_t q = tiny_degree ? 0 : primary_palette_size(delta, params.epsilon);
  trace.q = q;
  trace.residual_cap = tiny_degree ? delta : residual_degree_cap(delta);

  if (!tiny_degree && q < 2 * std::uint64_t{delta} + 1) {
    for (std::uint32_t k = 0; k <= params.retries; ++k) {
      const Seed seed = k == 0 ? params.seed : derive(params.seed, Stream::Retry, k);
      ++trace.attempts;
      std::string failure;
      auto coloring = run_pipeline(g, delta, q, params, seed, trace, failure);
      if (coloring) {
        result.outcome = Outcome::Colored;
        result.coloring = std::move(coloring);
        return result;
      }
      trace.attempt_failures.push_back(std::move(failure));
    }
  }

  result.coloring = global_fallback(g, matching, delta, trace);
  result.outcome = Outcome::Colored;
  return result;
}

}  // namespace bihole
