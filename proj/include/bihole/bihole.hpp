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
#include <vector>

#include "bihole/graph.hpp"
#include "bihole/rng.hpp"

namespace bihole {

/// A pair (X ⊆ U, Y ⊆ V) with |X| = |Y| and no edge between X and Y.
struct BiHole {
  std::vector<Vertex> left_set;   // sorted
  std::vector<Vertex> right_set;  // sorted

  std::size_t size() const noexcept { return left_set.size(); }
};

struct BiholeParams {
  double epsilon = 0.5;  // in (0, 1)
  std::uint32_t retries = 3;
  Seed seed{};
};

struct BiholeReport {
  double avg_degree = 0;
  std::uint64_t target = 0;     // ceil((1 - eps) * ln D / D * n), D clamped to >= e
  std::uint64_t t = 0;          // size of the returned bi-hole
  bool target_met = false;
  std::uint32_t attempts = 0;
  bool greedy_fallback = false;  // average degree below e: no sampling
  std::uint32_t trimmed_per_side = 0;
  bool heavy_trim = false;       // trimming removed >= 25% of each side
  double sample_probability = 0;
  std::uint64_t sampled_left = 0;    // |U'| of the returned attempt
  std::uint64_t surviving_right = 0; // |V'| of the returned attempt
};

struct BiholeResult {
  BiHole hole;
  BiholeReport report;
};

/// ceil((1 - eps) * (ln D / D) * n) with D replaced by e when D < e, where
/// ln D / D is maximal.
std::uint64_t bihole_target(std::uint64_t n, double avg_degree, double epsilon);

/// Randomized large bi-hole:
///  1. trim ceil(eps^2 n) highest-degree vertices per side;
///  2. keep each surviving left vertex with probability (1 - eps/2) ln D / D;
///  3. take every surviving right vertex with no kept neighbor;
///  4. balance by dropping the lowest-index surplus of the larger side.
/// Repeats with derived seeds (up to `retries` more times) while below the
/// target and returns the largest attempt. For average degree D < e the
/// greedy edgeless-pair search is used instead.
///
/// Throws DomainError on unbalanced or empty input, or eps outside (0, 1).
BiholeResult find_bihole(const BipartiteGraph& g, const BiholeParams& params);

/// True iff |X| = |Y| and no edge joins X to Y. Throws DomainError on an
/// out-of-range index.
bool verify_bihole(const BipartiteGraph& g, const BiHole& hole);

/// Largest t found by adding left vertices in increasing-degree order while
/// the common non-neighborhood stays at least as large as the chosen set.
BiHole greedy_bihole(const BipartiteGraph& g);

}  // namespace bihole
