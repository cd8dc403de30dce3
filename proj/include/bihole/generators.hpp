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

#include "bihole/graph.hpp"
#include "bihole/rng.hpp"

namespace bihole {

/// G(n, n, p): each of the n^2 pairs is drawn as an independent Bernoulli(p)
/// in left-major order (u = 0..n-1, then v = 0..n-1) from the Gnnp stream.
BipartiteGraph gnnp(Vertex n, double p, Seed seed);

/// Left vertex 0 adjacent to every right vertex; no other edges. Has no
/// balanced coloring for n >= 1.
BipartiteGraph full_star(Vertex n);

BipartiteGraph complete(Vertex n);
BipartiteGraph empty(Vertex n);
BipartiteGraph perfect_matching(Vertex n);

/// u_i ~ v_{(i + j) mod n} for j < d: every vertex has degree exactly d.
BipartiteGraph circulant(Vertex n, Vertex d);

/// circulant(n, d) plus edges u_0 ~ v_j for d <= j < hub_degree, so the max
/// degree is hub_degree while almost every vertex keeps degree d or d + 1.
BipartiteGraph circulant_with_hub(Vertex n, Vertex d, Vertex hub_degree);

/// Deletes edges until max_degree(g) <= cap. Each left vertex keeps its cap
/// lowest-index neighbors, then each right vertex keeps its cap lowest-index
/// remaining neighbors. Deterministic.
BipartiteGraph cap_max_degree(const BipartiteGraph& g, std::uint32_t cap);

}  // namespace bihole
