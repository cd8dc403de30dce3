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

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "bihole/errors.hpp"
#include "bihole/graph.hpp"

namespace bihole {

namespace {

bool skippable(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

// Splits on blanks and parses every token as an unsigned integer.
bool parse_numbers(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

}  // namespace

BipartiteGraph parse_edge_list(std::string_view text) {
  std::vector<std::uint64_t> nums;
  bool have_header = false;
  std::uint64_t left = 0, right = 0, declared = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;

  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (skippable(line)) continue;

    if (!parse_numbers(line, nums)) throw ParseError(line_no, "malformed line");
    if (!have_header) {
      if (nums.size() != 3) throw ParseError(line_no, "expected header 'nL nR m'");
      left = nums[0];
      right = nums[1];
      declared = nums[2];
      if (left > UINT32_MAX - 1 || right > UINT32_MAX - 1) {
        throw ParseError(line_no, "side size too large");
      }
      have_header = true;
      edges.reserve(declared);
      continue;
    }
    if (nums.size() != 2) throw ParseError(line_no, "expected edge 'u v'");
    if (nums[0] >= left || nums[1] >= right) {
      throw ParseError(line_no, "edge (" + std::to_string(nums[0]) + "," +
                                    std::to_string(nums[1]) + ") out of range");
    }
    if (edges.size() == declared) throw ParseError(line_no, "more edges than declared");
    edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header");
  if (edges.size() != declared) {
    throw ParseError(line_no, "declared " + std::to_string(declared) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return BipartiteGraph::build(static_cast<Vertex>(left), static_cast<Vertex>(right), edges);
}

std::string serialize_edge_list(const BipartiteGraph& g) {
  std::string out;
  out.reserve(16 + g.edge_count() * 12);
  out += std::to_string(g.left_count());
  out += ' ';
  out += std::to_string(g.right_count());
  out += ' ';
  out += std::to_string(g.edge_count());
  out += '\n';
  for (Vertex u = 0; u < g.left_count(); ++u) {
    const std::string prefix = std::to_string(u) + ' ';
    for (Vertex v : g.left_neighbors(u)) {
      out += prefix;
      out += std::to_string(v);
      out += '\n';
    }
  }
  return out;
}

BipartiteGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

void write_edge_list_file(const BipartiteGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_edge_list(g);
}

}  // namespace bihole
