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

#include <gtest/gtest.h>

#include <filesystem>

#include "bihole/errors.hpp"
#include "bihole/generators.hpp"
#include "bihole/graph.hpp"
#include "test_support.hpp"

namespace bihole {
namespace {

std::vector<Edge> E(std::initializer_list<Edge> e) { return e; }

TEST(Graph, BuildsPerfectMatching) {
  const auto g = BipartiteGraph::build(2, 2, E({{0, 0}, {1, 1}}));
  EXPECT_EQ(g.edge_count(), 2u);
  for (Vertex i = 0; i < 2; ++i) {
    EXPECT_EQ(g.left_degree(i), 1u);
    EXPECT_EQ(g.right_degree(i), 1u);
  }
}

TEST(Graph, EmptyAndDuplicates) {
  EXPECT_EQ(BipartiteGraph::build(3, 3, {}).edge_count(), 0u);
  const auto g = BipartiteGraph::build(2, 2, E({{0, 0}, {0, 0}, {0, 1}}));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.left_degree(0), 2u);
}

TEST(Graph, RejectsOutOfRange) {
  try {
    BipartiteGraph::build(2, 2, E({{0, 0}, {1, 2}}));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos) << e.what();
  }
}

TEST(Graph, AverageDegree) {
  EXPECT_EQ(average_degree(empty(3)), (Rational{0, 1}));
  EXPECT_EQ(average_degree(complete(3)), (Rational{3, 1}));
  EXPECT_EQ(average_degree(perfect_matching(4)), (Rational{1, 1}));
  const auto g = BipartiteGraph::build(3, 3, E({{0, 0}, {0, 1}}));
  EXPECT_EQ(average_degree(g), (Rational{2, 3}));
  EXPECT_THROW(average_degree(BipartiteGraph::build(0, 2, {})), DomainError);
}

TEST(Graph, MaxDegree) {
  EXPECT_EQ(max_degree(complete(3)), 3u);
  EXPECT_EQ(max_degree(BipartiteGraph::build(4, 4, E({{0, 0}, {0, 1}, {0, 2}, {0, 3}}))), 4u);
  EXPECT_EQ(max_degree(empty(5)), 0u);
  // the maximum may sit on the right side
  EXPECT_EQ(max_degree(BipartiteGraph::build(3, 1, E({{0, 0}, {1, 0}, {2, 0}}))), 3u);
}

TEST(Graph, ComplementDegree) {
  for (Vertex i = 0; i < 3; ++i) {
    EXPECT_EQ(complement_degree(complete(3), {Side::Left, i}), 0u);
    EXPECT_EQ(complement_degree(empty(3), {Side::Right, i}), 3u);
  }
  EXPECT_EQ(complement_degree(perfect_matching(4), {Side::Left, 2}), 3u);
  EXPECT_THROW(complement_degree(empty(3), {Side::Left, 3}), DomainError);
}

TEST(Graph, TrimTiesGoToLowerIndex) {
  const TrimResult r = trim_high_degree(complete(3), 1);
  EXPECT_EQ(r.removed_left, std::vector<Vertex>{0});
  EXPECT_EQ(r.removed_right, std::vector<Vertex>{0});
  EXPECT_EQ(r.kept.graph, complete(2));
  EXPECT_EQ(r.kept.left_map, (std::vector<Vertex>{1, 2}));
}

TEST(Graph, TrimIdentityAndHighDegree) {
  const auto g = testing::random_graph(6, 6, 0.4, 11);
  const TrimResult id = trim_high_degree(g, 0);
  EXPECT_EQ(id.kept.graph, g);
  EXPECT_TRUE(id.removed_left.empty());

  // left degrees (3, 1, 1): vertex 0 goes
  const auto h = BipartiteGraph::build(3, 3, E({{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 2}}));
  EXPECT_EQ(trim_high_degree(h, 1).removed_left, std::vector<Vertex>{0});
}

TEST(Graph, InducedMapsIndices) {
  EXPECT_EQ(induced(complete(3), std::vector<Vertex>{0, 1, 2}, std::vector<Vertex>{0, 1, 2}).graph,
            complete(3));
  const InducedGraph one = induced(complete(3), std::vector<Vertex>{0}, std::vector<Vertex>{0});
  EXPECT_EQ(one.graph.edge_count(), 1u);
  const InducedGraph e = induced(empty(3), std::vector<Vertex>{1, 0}, std::vector<Vertex>{2});
  EXPECT_EQ(e.graph.left_count(), 2u);
  EXPECT_EQ(e.graph.right_count(), 1u);
  EXPECT_EQ(e.graph.edge_count(), 0u);
  EXPECT_EQ(e.right_map, std::vector<Vertex>{2});
}

TEST(Graph, InducedAgreesWithHasEdge) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = testing::random_graph(9, 7, 0.35, s);
    const std::vector<Vertex> kl{1, 3, 4, 8}, kr{0, 2, 6};
    const InducedGraph sub = induced(g, kl, kr);
    for (Vertex i = 0; i < kl.size(); ++i)
      for (Vertex j = 0; j < kr.size(); ++j)
        EXPECT_EQ(sub.graph.has_edge(i, j), g.has_edge(kl[i], kr[j]));
  }
}

TEST(Graph, TransposeIsConsistent) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = testing::random_graph(8, 11, 0.3, 100 + s);
    std::uint64_t total = 0;
    for (Vertex v = 0; v < g.right_count(); ++v) {
      auto nb = g.right_neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex u : nb) EXPECT_TRUE(g.has_edge(u, v));
      total += nb.size();
    }
    EXPECT_EQ(total, g.edge_count());
  }
}

TEST(EdgeList, ParseAndSerialize) {
  const auto g = parse_edge_list("2 2 2\n0 0\n1 1\n");
  EXPECT_EQ(g, perfect_matching(2));
  EXPECT_EQ(serialize_edge_list(perfect_matching(2)), "2 2 2\n0 0\n1 1\n");
  EXPECT_EQ(parse_edge_list("# comment\n\n3 3 1\n# edge\n2 1\n").edge_count(), 1u);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  try {
    parse_edge_list("2 2 1\n0 5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_edge_list("2 2 2\n0 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("2 2 1\n0 0\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("2 x 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
}

TEST(EdgeList, RoundTripProperty) {
  const auto dir = std::filesystem::temp_directory_path();
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto g = testing::random_graph(1 + s % 9, 1 + s % 7, 0.4, s);
    EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g);
  }
  const auto path = (dir / "bihole_roundtrip.txt").string();
  const auto g = testing::random_graph(12, 12, 0.2, 5);
  write_edge_list_file(g, path);
  EXPECT_EQ(read_edge_list_file(path), g);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace bihole
