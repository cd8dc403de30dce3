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

#include "bihole/oracle.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "bihole/errors.hpp"

namespace bihole {

namespace {

std::vector<std::uint32_t> neighbor_masks(const BipartiteGraph& g) {
  std::vector<std::uint32_t> masks(g.left_count(), 0);
  for (Vertex u = 0; u < g.left_count(); ++u)
    for (Vertex v : g.left_neighbors(u)) masks[u] |= std::uint32_t{1} << v;
  return masks;
}

std::vector<Vertex> members(std::uint32_t mask, std::size_t limit) {
  std::vector<Vertex> out;
  while (mask != 0 && out.size() < limit) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

struct BiholeSearch {
  int n;
  std::vector<std::uint32_t> nbr;
  int best = -1;
  std::uint32_t best_x = 0;
  std::uint32_t best_cover = 0;
  std::uint64_t explored = 0;

  void run(int i, std::uint32_t x, int size, std::uint32_t cover) {
    ++explored;
    const int free_right = n - std::popcount(cover);
    const int value = std::min(size, free_right);
    if (value > best) {
      best = value;
      best_x = x;
      best_cover = cover;
    }
    if (i == n) return;
    // Adding vertices can only grow |X| and shrink the free side.
    if (std::min(size + (n - i), free_right) <= best) return;
    run(i + 1, x | (std::uint32_t{1} << i), size + 1, cover | nbr[i]);
    run(i + 1, x, size, cover);
  }
};

}  // namespace

OracleResult max_bihole_exact(const BipartiteGraph& g) {
  if (!g.balanced()) throw DomainError("max_bihole_exact: graph is not balanced");
  if (g.left_count() > kMaxBiholeExactCap)
    throw DomainError("max_bihole_exact: n=" + std::to_string(g.left_count()) + " exceeds cap " +
                      std::to_string(kMaxBiholeExactCap));
  BiholeSearch s{static_cast<int>(g.left_count()), neighbor_masks(g)};
  s.run(0, 0, 0, 0);

  OracleResult out;
  out.optimum = static_cast<std::uint64_t>(s.best);
  out.explored = s.explored;
  const std::uint32_t all = g.left_count() == 32 ? ~0u : (std::uint32_t{1} << g.left_count()) - 1;
  BiHole hole;
  hole.left_set = members(s.best_x, s.best);
  hole.right_set = members(all & ~s.best_cover, s.best);
  out.hole = std::move(hole);
  return out;
}

OracleResult chi_b_exact(const BipartiteGraph& g) {
  if (!g.balanced()) throw DomainError("chi_b_exact: graph is not balanced");
  const Vertex n = g.left_count();
  if (n > kChiBExactCap)
    throw DomainError("chi_b_exact: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(kChiBExactCap));
  const auto nbr = neighbor_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  constexpr int kInf = 1 << 20;
  constexpr int kUnknown = -1;
  std::vector<int> memo(std::size_t{1} << (2 * n), kUnknown);
  std::vector<std::uint32_t> choice(memo.size(), 0);  // (X << 8) | Y of the best first class
  std::uint64_t explored = 0;

  auto key = [n](std::uint32_t ru, std::uint32_t rv) { return (std::size_t{ru} << n) | rv; };

  auto solve = [&](auto&& self, std::uint32_t ru, std::uint32_t rv) -> int {
    if (ru == 0 && rv == 0) return 0;
    int& slot = memo[key(ru, rv)];
    if (slot != kUnknown) return slot;
    ++explored;
    slot = kInf;
    if (std::popcount(ru) != std::popcount(rv)) return slot;
    const std::uint32_t lowest = ru & (0u - ru);
    const std::uint32_t rest = ru & ~lowest;
    // X = lowest ∪ sub for every sub ⊆ rest.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t x = lowest | sub;
      std::uint32_t cover = 0;
      for (std::uint32_t m = x; m != 0; m &= m - 1) cover |= nbr[std::countr_zero(m)];
      const std::uint32_t avail = rv & ~cover;
      const int k = std::popcount(x);
      if (std::popcount(avail) >= k) {
        for (std::uint32_t y = avail;; y = (y - 1) & avail) {
          if (std::popcount(y) == k) {
            const int r = self(self, ru & ~x, rv & ~y);
            if (r + 1 < slot) {
              slot = r + 1;
              choice[key(ru, rv)] = (x << 8) | y;
            }
          }
          if (y == 0) break;
        }
      }
      if (sub == 0) break;
    }
    return slot;
  };

  OracleResult out;
  const int best = solve(solve, full, full);
  out.explored = explored;
  if (best >= kInf) return out;
  out.optimum = static_cast<std::uint64_t>(best);

  BalancedColoring coloring;
  coloring.left_colors.assign(n, kUncolored);
  coloring.right_colors.assign(n, kUncolored);
  std::uint32_t ru = full, rv = full;
  Color color = 0;
  while (ru != 0) {
    const std::uint32_t c = choice[key(ru, rv)];
    const std::uint32_t x = c >> 8, y = c & 0xFF;
    for (Vertex u : members(x, n)) coloring.left_colors[u] = color;
    for (Vertex v : members(y, n)) coloring.right_colors[v] = color;
    ru &= ~x;
    rv &= ~y;
    ++color;
  }
  coloring.palette_size = color;
  out.coloring = std::move(coloring);
  return out;
}

std::uint64_t max_matching_exact(const BipartiteGraph& g, bool complement) {
  const Vertex nl = g.left_count(), nr = g.right_count();
  if (nl > kMatchingExactCap || nr > kMatchingExactCap)
    throw DomainError("max_matching_exact: side size exceeds cap " +
                      std::to_string(kMatchingExactCap));
  // best[mask] over left vertices processed so far; mask = used right vertices.
  std::vector<int> best(std::size_t{1} << nr, -1);
  best[0] = 0;
  for (Vertex u = 0; u < nl; ++u) {
    std::vector<int> next = best;  // u left unmatched
    for (std::uint32_t mask = 0; mask < best.size(); ++mask) {
      if (best[mask] < 0) continue;
      for (Vertex v = 0; v < nr; ++v) {
        if (mask & (std::uint32_t{1} << v)) continue;
        if (g.has_edge(u, v) == complement) continue;
        const std::uint32_t m2 = mask | (std::uint32_t{1} << v);
        next[m2] = std::max(next[m2], best[mask] + 1);
      }
    }
    best = std::move(next);
  }
  return static_cast<std::uint64_t>(*std::max_element(best.begin(), best.end()));
}

}  // namespace bihole
