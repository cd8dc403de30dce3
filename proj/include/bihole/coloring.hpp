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
#include <string>
#include <vector>

#include "bihole/graph.hpp"
#include "bihole/matching.hpp"
#include "bihole/rng.hpp"

namespace bihole {

using Color = std::uint32_t;
inline constexpr Color kUncolored = UINT32_MAX;

/// Total coloring in which every color class is a bi-hole.
struct BalancedColoring {
  std::vector<Color> left_colors;
  std::vector<Color> right_colors;
  std::uint32_t palette_size = 0;  // number of distinct colors in use
};

struct ColoringParams {
  double epsilon = 0.5;  // in (0, 1)
  Seed seed{};
  std::uint64_t resample_cap = 0;  // 0 means 1000 * (n + q)
  std::uint32_t retries = 3;
  std::uint64_t stall_window = 0;  // 0 means n + q
};

enum class Phase { SmallS, LargeS, FallbackGlobal, Infeasible };
enum class Outcome { Colored, Infeasible, Failure };

std::string phase_name(Phase phase);
std::string outcome_name(Outcome outcome);

/// Intermediate state of the pipeline for the last attempt that ran.
struct ColoringTrace {
  std::uint32_t max_degree = 0;
  std::uint32_t q = 0;          // primary palette is [0, q)
  std::uint32_t residual_cap = 0;  // d* = ceil(D / ln^{3/2} D)
  std::vector<std::vector<Color>> available_lists;  // Q_v per right vertex
  std::vector<Vertex> uncolored_S;     // right vertices with empty Q_v
  std::vector<Vertex> equalize_removed;  // S_0
  std::vector<std::uint64_t> deficits;   // a_c = |U_c| - |V'_c|
  std::vector<std::vector<Vertex>> candidates;  // U*_c
  std::vector<Vertex> sampled_SU;   // S'_U
  std::vector<Vertex> selected_SU;  // S_U
  std::optional<Color> star_color;  // c*
  Phase phase_taken = Phase::FallbackGlobal;
  std::uint64_t resamples = 0;
  std::uint32_t attempts = 0;
  std::uint32_t residual_max_degree = 0;  // max degree of the (S_U, S') graph
  std::string fallback_rung;  // "", "lemma", "exhaustive" or "greedy-matching"
  std::vector<std::string> attempt_failures;
  std::uint64_t left_class_min = 0;  // min / max |U_c| after the left coloring
  std::uint64_t left_class_max = 0;
};

struct ColoringResult {
  Outcome outcome = Outcome::Failure;
  std::optional<BalancedColoring> coloring;
  ColoringTrace trace;
  std::string message;
};

/// Randomized balanced coloring of a bounded-degree balanced graph.
///
/// Colors U uniformly from q = ceil((1 + eps/2) D / ln D) colors, list-colors
/// V from the colors missing in each neighborhood, equalizes class sizes by
/// uncoloring surplus right vertices, and finishes the uncolored set S' either
/// with one extra color c* = q (when |S| <= n / D^2) or by selecting a
/// matching left set S_U through Moser-Tardos resampling and coloring the
/// low-degree residual graph (S_U, S') greedily from q + 1 upward. Failed
/// attempts retry with derived seeds, then fall back to the greedy coloring
/// along a complement perfect matching on the whole graph.
///
/// Returns Outcome::Infeasible when the complement has no perfect matching.
/// Throws DomainError on unbalanced or empty input.
ColoringResult color_balanced(const BipartiteGraph& g, const ColoringParams& params);

/// q = ceil((1 + eps/2) D / ln D).
std::uint32_t primary_palette_size(std::uint32_t max_degree, double epsilon);

/// d* = ceil(D / ln^{3/2} D).
std::uint32_t residual_degree_cap(std::uint32_t max_degree);

/// Independent uniform colors from [0, q), drawn in index order.
std::vector<Color> phase1_color_U(Vertex left_count, std::uint32_t q, Seed seed);

struct RightColoring {
  std::vector<Color> colors;  // kUncolored where Q_v is empty
  std::vector<std::vector<Color>> available_lists;
  std::vector<Vertex> uncolored;
};

/// Q_v = [0, q) minus the colors on N(v); v takes a uniform member of Q_v or
/// stays uncolored when Q_v is empty.
RightColoring phase2_color_V(const BipartiteGraph& g, std::span<const Color> left_colors,
                             std::uint32_t q, Seed seed);

struct Equalization {
  std::vector<Vertex> removed;         // S_0, sorted
  std::vector<std::uint64_t> deficits;  // a_c
};

/// For each color c with |V_c| > |U_c|, uncolors the |V_c| - |U_c| lowest-index
/// members of V_c (in place).
Equalization equalize(std::span<const Color> left_colors, std::vector<Color>& right_colors,
                      std::uint32_t q);

/// Colors every vertex of `residual` (= S ∪ S_0) with star_color and, for
/// each c < deficits.size(), recolors the deficits[c] lowest-index vertices
/// of U_c that have no neighbor in `residual`. Returns false, leaving the
/// colorings untouched, if some U_c has too few such vertices.
bool small_s_patch(const BipartiteGraph& g, std::vector<Color>& left_colors,
                   std::vector<Color>& right_colors, std::span<const Vertex> residual,
                   std::span<const std::uint64_t> deficits, Color star_color);

struct SelectParams {
  std::uint32_t max_degree = 0;
  std::uint64_t resample_cap = 0;
  Seed seed{};
  // Give up once this many resamples pass without a new minimum of
  // simultaneously violated events. 0 means n + q.
  std::uint64_t stall_window = 0;
};

struct SelectResult {
  bool ok = false;
  std::string failure;
  std::vector<std::vector<Vertex>> candidates;  // U*_c
  std::vector<Vertex> sampled;                  // S'_U
  std::vector<Vertex> selected;                 // S_U, sorted
  std::uint64_t resamples = 0;
};

/// Picks S_U with exactly deficits[c] vertices from each U*_c (the members of
/// U_c with at most d* neighbors in `residual`) so that no residual vertex
/// has more than d* neighbors in S_U.
///
/// Each left vertex joins S'_U with probability 1 / ln^{7/4} D. Bad events,
/// numbered B_v (v in residual, by index) then A_c (by color):
///   B_v: v has more than d* neighbors in S'_U;
///   A_c: |S'_U ∩ U*_c| <= n / (D ln^{7/8} D).
/// While one holds, the lowest-numbered one has its variables redrawn
/// (N(v) for B_v, U*_c for A_c), up to resample_cap times or until
/// stall_window resamples pass without progress.
SelectResult select_SU(const BipartiteGraph& g, std::span<const Color> left_colors,
                       std::uint32_t q, std::span<const Vertex> residual,
                       std::span<const std::uint64_t> deficits, const SelectParams& params);

/// Greedy balanced coloring along a complement perfect matching: pairs are
/// taken in increasing left index and both ends get the smallest color >=
/// palette_offset unused on either neighborhood. Uses at most 2D + 1 colors.
///
/// Throws DomainError unless n >= 2 * max_degree, InfeasibleError if the
/// complement matching is not perfect.
BalancedColoring lemma_easy_color(const BipartiteGraph& g, Color palette_offset = 0);

/// The same greedy along a given perfect complement matching, without the
/// degree precondition (so without the 2D + 1 bound).
BalancedColoring greedy_matching_color(const BipartiteGraph& g, const Matching& matching,
                                       Color palette_offset = 0);

/// True iff every vertex is colored, every class has equal left and right
/// counts, and no edge joins two vertices of the same color.
bool verify_coloring(const BipartiteGraph& g, const BalancedColoring& coloring);

/// Number of distinct colors used.
std::uint32_t count_palette(const BalancedColoring& coloring);

}  // namespace bihole
