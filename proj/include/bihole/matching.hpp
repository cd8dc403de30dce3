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

#include <vector>

#include "bihole/graph.hpp"

namespace bihole {

/// A matching of the bipartite complement: every pair is a non-edge of the
/// source graph and no vertex repeats.
struct Matching {
  std::vector<Edge> pairs;  // sorted by left index
  bool perfect = false;     // pairs.size() == n

  std::size_t size() const noexcept { return pairs.size(); }
};

/// Maximum matching of the complement of a balanced graph, never
/// materializing the complement. A greedy pass (first free non-neighbor)
/// seeds the matching, then each still-free left vertex, in increasing
/// index order, gets one BFS for an augmenting path. Complement neighbors
/// are enumerated by merging a list of unvisited right vertices against the
/// sorted adjacency row, so one search costs O(n + |E|).
///
/// Throws DomainError on unbalanced input.
Matching max_matching_complement(const BipartiteGraph& g);

/// A balanced coloring exists iff the complement has a perfect matching.
bool has_balanced_coloring(const BipartiteGraph& g);

}  // namespace bihole
