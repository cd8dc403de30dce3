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

#include "bihole/bihole.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "bihole/errors.hpp"
#include "bihole/simd/kernels.hpp"

namespace bihole {

namespace {

struct Attempt {
  std::vector<Vertex> left;   // original indices, sorted
  std::vector<Vertex> right;  // original indices, sorted
  std::uint64_t sampled_left = 0;
  std::uint64_t surviving_right = 0;
};

Attempt sample_once(const InducedGraph& trimmed, std::uint64_t threshold, Seed seed) {
  const BipartiteGraph& h = trimmed.graph;
  Rng rng(seed);
  std::vector<std::uint64_t> draws(h.left_count());
  rng.fill(draws);
  std::vector<Vertex> picked;
  simd::select_below(draws, threshold, 0, picked);

  std::vector<std::uint32_t> marks(h.left_count(), 0);
  for (Vertex u : picked) marks[u] = 1;
  std::vector<Vertex> survivors;
  for (Vertex v = 0; v < h.right_count(); ++v) {
    if (simd::count_marked(h.right_neighbors(v), marks.data()) == 0) survivors.push_back(v);
  }

  Attempt a;
  a.sampled_left = picked.size();
  a.surviving_right = survivors.size();
  const std::size_t t = std::min(picked.size(), survivors.size());
  // Surplus vertices are dropped from the low-index end.
  for (std::size_t i = picked.size() - t; i < picked.size(); ++i)
    a.left.push_back(trimmed.left_map[picked[i]]);
  for (std::size_t i = survivors.size() - t; i < survivors.size(); ++i)
    a.right.push_back(trimmed.right_map[survivors[i]]);
  return a;
}

}  // namespace

std::uint64_t bihole_target(std::uint64_t n, double avg_degree, double epsilon) {
  const double d = std::max(avg_degree, std::numbers::e);
  const double raw = (1.0 - epsilon) * std::log(d) / d * static_cast<double>(n);
  return static_cast<std::uint64_t>(std::ceil(raw - 1e-9));
}

BiHole greedy_bihole(const BipartiteGraph& g) {
  const Vertex n = g.left_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.left_degree(a) < g.left_degree(b); });

  std::vector<bool> covered(g.right_count(), false);
  std::uint64_t uncovered = g.right_count();
  std::vector<Vertex> chosen;
  for (Vertex u : order) {
    std::uint64_t fresh = 0;
    for (Vertex v : g.left_neighbors(u)) fresh += !covered[v];
    if (uncovered - fresh < chosen.size() + 1) continue;
    for (Vertex v : g.left_neighbors(u)) covered[v] = true;
    uncovered -= fresh;
    chosen.push_back(u);
  }
  std::sort(chosen.begin(), chosen.end());
  BiHole hole;
  hole.left_set = std::move(chosen);
  for (Vertex v = 0; v < g.right_count() && hole.right_set.size() < hole.left_set.size(); ++v) {
    if (!covered[v]) hole.right_set.push_back(v);
  }
  return hole;
}

BiholeResult find_bihole(const BipartiteGraph& g, const BiholeParams& params) {
  if (!g.balanced()) throw DomainError("find_bihole: graph is not balanced");
  if (g.left_count() == 0) throw DomainError("find_bihole: graph is empty");
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
    throw DomainError("find_bihole: epsilon must lie in (0, 1)");

  const Vertex n = g.left_count();
  const double eps = params.epsilon;
  BiholeResult out;
  BiholeReport& rep = out.report;
  rep.avg_degree = average_degree(g).value();
  rep.target = bihole_target(n, rep.avg_degree, eps);

  if (rep.avg_degree < std::numbers::e) {
    out.hole = greedy_bihole(g);
    rep.greedy_fallback = true;
    rep.attempts = 1;
    rep.t = out.hole.size();
    rep.target_met = rep.t >= rep.target;
    return out;
  }

  const double trim_raw = std::ceil(eps * eps * n - 1e-9);
  rep.trimmed_per_side = static_cast<std::uint32_t>(std::min<double>(trim_raw, n));
  rep.heavy_trim = 4.0 * rep.trimmed_per_side >= static_cast<double>(n);
  const TrimResult trim = trim_high_degree(g, rep.trimmed_per_side);

  const double delta = rep.avg_degree;
  rep.sample_probability = std::min(1.0, (1.0 - eps / 2.0) * std::log(delta) / delta);
  const std::uint64_t threshold = bernoulli_threshold(rep.sample_probability);

  Attempt best;
  bool have_best = false;
  for (std::uint32_t k = 0; k <= params.retries; ++k) {
    Attempt a = sample_once(trim.kept, threshold, derive(params.seed, Stream::BiholeSample, k));
    ++rep.attempts;
    if (!have_best || a.left.size() > best.left.size()) {
      best = std::move(a);
      have_best = true;
    }
    if (best.left.size() >= rep.target) break;
  }
  out.hole.left_set = std::move(best.left);
  out.hole.right_set = std::move(best.right);
  rep.sampled_left = best.sampled_left;
  rep.surviving_right = best.surviving_right;
  rep.t = out.hole.size();
  rep.target_met = rep.t >= rep.target;
  return out;
}

bool verify_bihole(const BipartiteGraph& g, const BiHole& hole) {
  for (Vertex u : hole.left_set)
    if (u >= g.left_count()) throw DomainError("verify_bihole: left index out of range");
  for (Vertex v : hole.right_set)
    if (v >= g.right_count()) throw DomainError("verify_bihole: right index out of range");
  if (hole.left_set.size() != hole.right_set.size()) return false;
  auto strictly_increasing = [](const std::vector<Vertex>& xs) {
    return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>{}) == xs.end();
  };
  if (!strictly_increasing(hole.left_set) || !strictly_increasing(hole.right_set)) return false;
  std::vector<std::uint32_t> in_right(g.right_count(), 0);
  for (Vertex v : hole.right_set) in_right[v] = 1;
  for (Vertex u : hole.left_set) {
    if (simd::count_marked(g.left_neighbors(u), in_right.data()) != 0) return false;
  }
  return true;
}

}  // namespace bihole
