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

// Shared fixtures and brute-force references for the unit tests. The
// references here enumerate directly and share no code with the library's
// oracle module.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "bihole/graph.hpp"
#include "bihole/rng.hpp"

namespace bihole::testing {

// Unbiased random graph with independent edge coins; used when a test needs
// shapes the generators do not produce (unbalanced sides, per-edge control).
inline BipartiteGraph random_graph(Vertex left, Vertex right, double p, std::uint64_t seed) {
  Rng rng(Seed{seed});
  std::vector<Edge> edges;
  for (Vertex u = 0; u < left; ++u)
    for (Vertex v = 0; v < right; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return BipartiteGraph::build(left, right, edges);
}

// Adjacency as left-row bitmasks (n <= 16).
inline std::vector<std::uint32_t> rows(const BipartiteGraph& g) {
  std::vector<std::uint32_t> r(g.left_count(), 0);
  for (auto [u, v] : g.edges()) r[u] |= 1u << v;
  return r;
}

// max over all (X, Y) pairs with no X-Y edge of min(|X|, |Y|).
inline std::uint64_t brute_bihole(const BipartiteGraph& g) {
  const auto r = rows(g);
  const std::uint32_t n = g.left_count(), m = g.right_count();
  std::uint64_t best = 0;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    std::uint32_t covered = 0;
    for (std::uint32_t u = 0; u < n; ++u)
      if (x >> u & 1) covered |= r[u];
    for (std::uint32_t y = 0; y < (1u << m); ++y) {
      if (y & covered) continue;
      best = std::max<std::uint64_t>(
          best, std::min(std::popcount(x), std::popcount(y)));
    }
  }
  return best;
}

// Maximum matching of g or of its complement, by trying every injective
// partial assignment through permutations of the right side.
inline std::uint64_t brute_matching(const BipartiteGraph& g, bool complement) {
  const std::uint32_t n = g.left_count();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = 0;
  do {
    std::uint64_t k = 0;
    for (Vertex u = 0; u < n; ++u) k += g.has_edge(u, perm[u]) != complement;
    best = std::max(best, k);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace bihole::testing
