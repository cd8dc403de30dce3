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

#include "bihole/bihole.hpp"
#include "bihole/coloring.hpp"
#include "bihole/graph.hpp"

namespace bihole {

inline constexpr Vertex kMaxBiholeExactCap = 24;
inline constexpr Vertex kChiBExactCap = 8;
inline constexpr Vertex kMatchingExactCap = 12;

/// Exhaustive ground truth for small instances.
struct OracleResult {
  std::optional<std::uint64_t> optimum;  // nullopt: infeasible
  std::optional<BiHole> hole;
  std::optional<BalancedColoring> coloring;
  std::uint64_t explored = 0;
};

/// Bipartite independence number. For a fixed X ⊆ U the best Y is every
/// non-neighbor of X, so the optimum is max_X min(|X|, n - |N(X)|) and only
/// the 2^n subsets of U are searched (depth-first, pruned by the bound
/// |X| + remaining). The witness truncates X and its non-neighborhood to
/// their lowest-index t members. Throws DomainError for n > 24 or
/// unbalanced input.
OracleResult max_bihole_exact(const BipartiteGraph& g);

/// Minimum number of bi-holes partitioning U ∪ V, or infeasible. Memoized
/// search over (uncovered left, uncovered right) states; every step opens the
/// class containing the lowest uncovered left vertex, which fixes a canonical
/// color order. Throws DomainError for n > 8 or unbalanced input.
OracleResult chi_b_exact(const BipartiteGraph& g);

/// Maximum matching size of g (or of its bipartite complement) by DP over
/// subsets of used right vertices. Throws DomainError for n > 12.
std::uint64_t max_matching_exact(const BipartiteGraph& g, bool complement);

}  // namespace bihole
