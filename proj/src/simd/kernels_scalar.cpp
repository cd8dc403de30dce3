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

#include "bihole/simd/kernels.hpp"

namespace bihole::simd::scalar {

std::size_t count_marked(std::span<const std::uint32_t> indices, const std::uint32_t* marks) {
  std::size_t count = 0;
  for (std::uint32_t i : indices) count += marks[i] != 0;
  return count;
}

std::size_t select_below(std::span<const std::uint64_t> draws, std::uint64_t threshold,
                         std::uint32_t base, std::vector<std::uint32_t>& out) {
  const std::size_t before = out.size();
  for (std::size_t i = 0; i < draws.size(); ++i) {
    if ((draws[i] >> 11) < threshold) out.push_back(base + static_cast<std::uint32_t>(i));
  }
  return out.size() - before;
}

}  // namespace bihole::simd::scalar
