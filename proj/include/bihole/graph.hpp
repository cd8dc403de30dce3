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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bihole {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // (left, right)

enum class Side : std::uint8_t { Left, Right };

struct VertexRef {
  Side side;
  Vertex index;
};

// Exact |E| / |U|.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

/// Immutable bipartite graph G = (U ∪ V, E).
///
/// Both orientations are stored CSR-style: a flat array of sorted neighbor
/// indices plus per-vertex offsets. Neighbor lists are strictly increasing,
/// and the right-side arrays are the exact transpose of the left-side ones.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Builds from an arbitrary edge list; duplicates are collapsed.
  /// Throws DomainError naming the first out-of-range pair.
  static BipartiteGraph build(Vertex left_count, Vertex right_count, std::span<const Edge> edges);

  /// Builds from per-left-vertex rows that are already strictly increasing
  /// and in range. Used by generators; checked in debug builds only.
  static BipartiteGraph from_sorted_rows(Vertex right_count,
                                         std::vector<std::uint64_t> left_offsets,
                                         std::vector<Vertex> left_adj);

  Vertex left_count() const noexcept { return left_count_; }
  Vertex right_count() const noexcept { return right_count_; }
  std::uint64_t edge_count() const noexcept { return left_adj_.size(); }
  bool balanced() const noexcept { return left_count_ == right_count_; }

  std::span<const Vertex> left_neighbors(Vertex u) const noexcept {
    return {left_adj_.data() + left_offsets_[u], left_adj_.data() + left_offsets_[u + 1]};
  }
  std::span<const Vertex> right_neighbors(Vertex v) const noexcept {
    return {right_adj_.data() + right_offsets_[v], right_adj_.data() + right_offsets_[v + 1]};
  }
  std::span<const Vertex> neighbors(VertexRef v) const noexcept {
    return v.side == Side::Left ? left_neighbors(v.index) : right_neighbors(v.index);
  }

  std::uint32_t left_degree(Vertex u) const noexcept {
    return static_cast<std::uint32_t>(left_offsets_[u + 1] - left_offsets_[u]);
  }
  std::uint32_t right_degree(Vertex v) const noexcept {
    return static_cast<std::uint32_t>(right_offsets_[v + 1] - right_offsets_[v]);
  }
  std::uint32_t degree(VertexRef v) const noexcept {
    return v.side == Side::Left ? left_degree(v.index) : right_degree(v.index);
  }

  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// All edges sorted by (left, right).
  std::vector<Edge> edges() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.left_count_ == b.left_count_ && a.right_count_ == b.right_count_ &&
           a.left_offsets_ == b.left_offsets_ && a.left_adj_ == b.left_adj_;
  }

 private:
  void build_transpose();

  Vertex left_count_ = 0;
  Vertex right_count_ = 0;
  std::vector<std::uint64_t> left_offsets_{0};
  std::vector<Vertex> left_adj_;
  std::vector<std::uint64_t> right_offsets_{0};
  std::vector<Vertex> right_adj_;
};

/// |E| / left_count. Throws DomainError when the left side is empty.
Rational average_degree(const BipartiteGraph& g);

/// Maximum degree over both sides; 0 for edgeless graphs.
std::uint32_t max_degree(const BipartiteGraph& g);

/// Degree in the bipartite complement: opposite side count minus d(v).
std::uint32_t complement_degree(const BipartiteGraph& g, VertexRef v);

struct InducedGraph {
  BipartiteGraph graph;
  std::vector<Vertex> left_map;   // new index -> original index
  std::vector<Vertex> right_map;  // new index -> original index
};

/// Subgraph induced by the kept vertices. Keep lists may be in any order;
/// duplicates are ignored and the new indices follow increasing original
/// index.
InducedGraph induced(const BipartiteGraph& g, std::span<const Vertex> keep_left,
                     std::span<const Vertex> keep_right);

struct TrimResult {
  InducedGraph kept;
  std::vector<Vertex> removed_left;   // sorted
  std::vector<Vertex> removed_right;  // sorted
};

/// Removes exactly count_per_side highest-degree vertices from each side
/// (ties: lower index removed first) and returns the induced graph on the
/// survivors.
TrimResult trim_high_degree(const BipartiteGraph& g, Vertex count_per_side);

/// Parses "nL nR m" followed by m lines "u v". Lines starting with '#'
/// and blank lines are skipped. Throws ParseError with the line number.
BipartiteGraph parse_edge_list(std::string_view text);

/// Canonical text form: header then edges sorted by (left, right).
std::string serialize_edge_list(const BipartiteGraph& g);

BipartiteGraph read_edge_list_file(const std::string& path);
void write_edge_list_file(const BipartiteGraph& g, const std::string& path);

}  // namespace bihole
