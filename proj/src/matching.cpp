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

#include "bihole/matching.hpp"

#include <algorithm>

#include "bihole/errors.hpp"

namespace bihole {

namespace {

constexpr Vertex kNone = UINT32_MAX;

// Doubly linked list over [0, n) with O(1) removal, walked in increasing order.
class IndexList {
 public:
  explicit IndexList(Vertex n) : next_(n + 1), prev_(n + 1) { reset(); }

  void reset() {
    const Vertex n = static_cast<Vertex>(next_.size() - 1);
    for (Vertex i = 0; i <= n; ++i) {
      next_[i] = i + 1;  // sentinel n is head/tail
      prev_[i] = i == 0 ? n : i - 1;
    }
    next_[n] = n == 0 ? n : 0;
    prev_[0] = n;
    prev_[n] = n == 0 ? n : n - 1;
  }

  Vertex sentinel() const { return static_cast<Vertex>(next_.size() - 1); }
  Vertex first() const { return next_[sentinel()]; }
  Vertex next(Vertex i) const { return next_[i]; }

  void erase(Vertex i) {
    next_[prev_[i]] = next_[i];
    prev_[next_[i]] = prev_[i];
  }

 private:
  std::vector<Vertex> next_;
  std::vector<Vertex> prev_;
};

}  // namespace

Matching max_matching_complement(const BipartiteGraph& g) {
  if (!g.balanced()) throw DomainError("complement matching needs a balanced graph");
  const Vertex n = g.left_count();
  std::vector<Vertex> mate_left(n, kNone);
  std::vector<Vertex> mate_right(n, kNone);

  // Greedy seed: each left vertex takes its first free complement neighbor.
  IndexList free_right(n);
  for (Vertex u = 0; u < n; ++u) {
    auto row = g.left_neighbors(u);
    std::size_t p = 0;
    for (Vertex v = free_right.first(); v != free_right.sentinel(); v = free_right.next(v)) {
      while (p < row.size() && row[p] < v) ++p;
      if (p < row.size() && row[p] == v) continue;
      mate_left[u] = v;
      mate_right[v] = u;
      free_right.erase(v);
      break;
    }
  }

  // One augmenting-path BFS per remaining free left vertex. A vertex with no
  // augmenting path now never gains one later, so a single pass is maximum.
  IndexList unvisited(n);
  std::vector<Vertex> parent(n, kNone);  // right -> left predecessor
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (mate_left[root] != kNone) continue;
    unvisited.reset();
    queue.assign(1, root);
    Vertex found = kNone;
    for (std::size_t head = 0; head < queue.size() && found == kNone; ++head) {
      const Vertex x = queue[head];
      auto row = g.left_neighbors(x);
      std::size_t p = 0;
      Vertex v = unvisited.first();
      while (v != unvisited.sentinel()) {
        const Vertex following = unvisited.next(v);
        while (p < row.size() && row[p] < v) ++p;
        if (!(p < row.size() && row[p] == v)) {
          unvisited.erase(v);
          parent[v] = x;
          if (mate_right[v] == kNone) {
            found = v;
            break;
          }
          queue.push_back(mate_right[v]);
        }
        v = following;
      }
    }
    // Flip the path root ... found.
    for (Vertex v = found; v != kNone;) {
      const Vertex x = parent[v];
      const Vertex previous = mate_left[x];
      mate_left[x] = v;
      mate_right[v] = x;
      v = previous;
    }
  }

  Matching m;
  for (Vertex u = 0; u < n; ++u) {
    if (mate_left[u] != kNone) m.pairs.emplace_back(u, mate_left[u]);
  }
  m.perfect = m.pairs.size() == n;
  return m;
}

bool has_balanced_coloring(const BipartiteGraph& g) { return max_matching_complement(g).perfect; }

}  // namespace bihole
