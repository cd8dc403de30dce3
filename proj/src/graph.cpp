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

#include "bihole/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "bihole/errors.hpp"

namespace bihole {

BipartiteGraph BipartiteGraph::build(Vertex left_count, Vertex right_count,
                                     std::span<const Edge> edges) {
  for (const auto& [u, v] : edges) {
    if (u >= left_count || v >= right_count) {
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for " + std::to_string(left_count) + "x" +
                        std::to_string(right_count) + " graph");
    }
  }
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(left_count) + 1, 0);
  std::vector<Vertex> adj;
  adj.reserve(sorted.size());
  for (const auto& [u, v] : sorted) {
    ++offsets[u + 1];
    adj.push_back(v);
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

  BipartiteGraph g;
  g.left_count_ = left_count;
  g.right_count_ = right_count;
  g.left_offsets_ = std::move(offsets);
  g.left_adj_ = std::move(adj);
  g.build_transpose();
  return g;
}

BipartiteGraph BipartiteGraph::from_sorted_rows(Vertex right_count,
                                                std::vector<std::uint64_t> left_offsets,
                                                std::vector<Vertex> left_adj) {
  assert(!left_offsets.empty() && left_offsets.front() == 0);
  assert(left_offsets.back() == left_adj.size());
  BipartiteGraph g;
  g.left_count_ = static_cast<Vertex>(left_offsets.size() - 1);
  g.right_count_ = right_count;
  g.left_offsets_ = std::move(left_offsets);
  g.left_adj_ = std::move(left_adj);
#ifndef NDEBUG
  for (Vertex u = 0; u < g.left_count_; ++u) {
    auto row = g.left_neighbors(u);
    for (std::size_t i = 0; i < row.size(); ++i) {
      assert(row[i] < right_count);
      assert(i == 0 || row[i - 1] < row[i]);
    }
  }
#endif
  g.build_transpose();
  return g;
}

void BipartiteGraph::build_transpose() {
  right_offsets_.assign(static_cast<std::size_t>(right_count_) + 1, 0);
  for (Vertex v : left_adj_) ++right_offsets_[v + 1];
  std::partial_sum(right_offsets_.begin(), right_offsets_.end(), right_offsets_.begin());
  right_adj_.resize(left_adj_.size());
  std::vector<std::uint64_t> cursor(right_offsets_.begin(), right_offsets_.end() - 1);
  // Scanning left vertices in increasing order keeps every right row sorted.
  for (Vertex u = 0; u < left_count_; ++u) {
    for (Vertex v : left_neighbors(u)) right_adj_[cursor[v]++] = u;
  }
}

bool BipartiteGraph::has_edge(Vertex u, Vertex v) const noexcept {
  if (left_degree(u) <= right_degree(v)) {
    auto row = left_neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }
  auto col = right_neighbors(v);
  return std::binary_search(col.begin(), col.end(), u);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(left_adj_.size());
  for (Vertex u = 0; u < left_count_; ++u) {
    for (Vertex v : left_neighbors(u)) out.emplace_back(u, v);
  }
  return out;
}

Rational average_degree(const BipartiteGraph& g) {
  if (g.left_count() == 0) throw DomainError("average degree of a graph with an empty side");
  std::uint64_t num = g.edge_count();
  std::uint64_t den = g.left_count();
  std::uint64_t d = std::gcd(num, den);
  if (d == 0) d = 1;
  return {num / d, den / d};
}

std::uint32_t max_degree(const BipartiteGraph& g) {
  std::uint32_t best = 0;
  for (Vertex u = 0; u < g.left_count(); ++u) best = std::max(best, g.left_degree(u));
  for (Vertex v = 0; v < g.right_count(); ++v) best = std::max(best, g.right_degree(v));
  return best;
}

std::uint32_t complement_degree(const BipartiteGraph& g, VertexRef v) {
  const Vertex limit = v.side == Side::Left ? g.left_count() : g.right_count();
  if (v.index >= limit) throw DomainError("vertex index out of range");
  const Vertex opposite = v.side == Side::Left ? g.right_count() : g.left_count();
  return opposite - g.degree(v);
}

namespace {

// Returns sorted unique members plus a dense old->new table (UINT32_MAX if dropped).
std::pair<std::vector<Vertex>, std::vector<Vertex>> remap(std::span<const Vertex> keep,
                                                          Vertex count) {
  std::vector<Vertex> table(count, UINT32_MAX);
  for (Vertex x : keep) {
    if (x >= count) throw DomainError("induced: vertex " + std::to_string(x) + " out of range");
    table[x] = 0;
  }
  std::vector<Vertex> members;
  for (Vertex x = 0; x < count; ++x) {
    if (table[x] == 0) {
      table[x] = static_cast<Vertex>(members.size());
      members.push_back(x);
    }
  }
  return {std::move(members), std::move(table)};
}

}  // namespace

InducedGraph induced(const BipartiteGraph& g, std::span<const Vertex> keep_left,
                     std::span<const Vertex> keep_right) {
  auto [left_map, left_table] = remap(keep_left, g.left_count());
  auto [right_map, right_table] = remap(keep_right, g.right_count());

  std::vector<std::uint64_t> offsets{0};
  offsets.reserve(left_map.size() + 1);
  std::vector<Vertex> adj;
  for (Vertex u : left_map) {
    for (Vertex v : g.left_neighbors(u)) {
      if (right_table[v] != UINT32_MAX) adj.push_back(right_table[v]);
    }
    offsets.push_back(adj.size());
  }
  InducedGraph out;
  out.graph = BipartiteGraph::from_sorted_rows(static_cast<Vertex>(right_map.size()),
                                               std::move(offsets), std::move(adj));
  out.left_map = std::move(left_map);
  out.right_map = std::move(right_map);
  return out;
}

namespace {

// Indices of the k highest-degree vertices, lower index first on ties.
template <class DegreeFn>
std::vector<Vertex> top_by_degree(Vertex count, Vertex k, DegreeFn degree) {
  std::vector<Vertex> order(count);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return degree(a) > degree(b); });
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<Vertex> complement_of(std::span<const Vertex> removed, Vertex count) {
  std::vector<bool> gone(count, false);
  for (Vertex x : removed) gone[x] = true;
  std::vector<Vertex> out;
  out.reserve(count - removed.size());
  for (Vertex x = 0; x < count; ++x) {
    if (!gone[x]) out.push_back(x);
  }
  return out;
}

}  // namespace

TrimResult trim_high_degree(const BipartiteGraph& g, Vertex count_per_side) {
  if (count_per_side > g.left_count() || count_per_side > g.right_count()) {
    throw DomainError("trim count " + std::to_string(count_per_side) + " exceeds a side size");
  }
  TrimResult out;
  out.removed_left = top_by_degree(g.left_count(), count_per_side,
                                   [&](Vertex u) { return g.left_degree(u); });
  out.removed_right = top_by_degree(g.right_count(), count_per_side,
                                    [&](Vertex v) { return g.right_degree(v); });
  auto keep_left = complement_of(out.removed_left, g.left_count());
  auto keep_right = complement_of(out.removed_right, g.right_count());
  out.kept = induced(g, keep_left, keep_right);
  return out;
}

}  // namespace bihole
