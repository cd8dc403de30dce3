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

#include "bihole/generators.hpp"

#include <algorithm>
#include <vector>

#include "bihole/errors.hpp"
#include "bihole/simd/kernels.hpp"

namespace bihole {

BipartiteGraph gnnp(Vertex n, double p, Seed seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("gnnp: p must lie in [0, 1]");
  const std::uint64_t threshold = bernoulli_threshold(p);
  Rng rng(derive(seed, Stream::Gnnp));
  std::vector<std::uint64_t> row(n);
  std::vector<std::uint64_t> offsets{0};
  offsets.reserve(static_cast<std::size_t>(n) + 1);
  std::vector<Vertex> adj;
  adj.reserve(static_cast<std::size_t>(static_cast<double>(n) * n * p * 1.05) + 16);
  for (Vertex u = 0; u < n; ++u) {
    rng.fill(row);
    simd::select_below(row, threshold, 0, adj);
    offsets.push_back(adj.size());
  }
  return BipartiteGraph::from_sorted_rows(n, std::move(offsets), std::move(adj));
}

BipartiteGraph full_star(Vertex n) {
  if (n == 0) throw DomainError("full_star: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(0, v);
  return BipartiteGraph::build(n, n, edges);
}

BipartiteGraph complete(Vertex n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(u, v);
  return BipartiteGraph::build(n, n, edges);
}

BipartiteGraph empty(Vertex n) { return BipartiteGraph::build(n, n, {}); }

BipartiteGraph perfect_matching(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, i);
  return BipartiteGraph::build(n, n, edges);
}

BipartiteGraph circulant(Vertex n, Vertex d) {
  if (d > n) throw DomainError("circulant: d must not exceed n");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * d);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < d; ++j) edges.emplace_back(i, (i + j) % n);
  return BipartiteGraph::build(n, n, edges);
}

BipartiteGraph circulant_with_hub(Vertex n, Vertex d, Vertex hub_degree) {
  if (hub_degree > n || d > hub_degree)
    throw DomainError("circulant_with_hub: need d <= hub_degree <= n");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * d + hub_degree);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < d; ++j) edges.emplace_back(i, (i + j) % n);
  for (Vertex j = d; j < hub_degree; ++j) edges.emplace_back(0, j);
  return BipartiteGraph::build(n, n, edges);
}

BipartiteGraph cap_max_degree(const BipartiteGraph& g, std::uint32_t cap) {
  std::vector<std::vector<Vertex>> cols(g.right_count());
  for (Vertex u = 0; u < g.left_count(); ++u) {
    auto row = g.left_neighbors(u);
    const std::size_t keep = std::min<std::size_t>(row.size(), cap);
    for (std::size_t i = 0; i < keep; ++i) cols[row[i]].push_back(u);
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.right_count(); ++v) {
    const std::size_t keep = std::min<std::size_t>(cols[v].size(), cap);
    for (std::size_t i = 0; i < keep; ++i) edges.emplace_back(cols[v][i], v);
  }
  return BipartiteGraph::build(g.left_count(), g.right_count(), edges);
}

}  // namespace bihole
