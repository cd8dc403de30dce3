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

// Data-parallel inner loops shared by the algorithms.
//
// Every kernel has a scalar reference in namespace scalar and, where the
// target supports it, an AVX2 variant in namespace avx2. The free
// functions below dispatch at runtime to the best variant the CPU offers;
// BIHOLE_LAB_SIMD=scalar in the environment forces the reference path.
// The variants are required to return identical results (tests/test_simd).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bihole::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Variant chosen at first use (CPU detection plus the environment override).
Isa active_isa();

/// Overrides the dispatch target; returns the previous one. Requesting an
/// ISA the CPU lacks falls back to Scalar.
Isa set_isa(Isa isa);

bool cpu_supports(Isa isa);

/// Number of i in `indices` with marks[indices[i]] != 0.
std::size_t count_marked(std::span<const std::uint32_t> indices, const std::uint32_t* marks);

/// Appends base + i to `out` for every i with (draws[i] >> 11) < threshold,
/// in increasing i. Returns the number appended.
std::size_t select_below(std::span<const std::uint64_t> draws, std::uint64_t threshold,
                         std::uint32_t base, std::vector<std::uint32_t>& out);

namespace scalar {
std::size_t count_marked(std::span<const std::uint32_t> indices, const std::uint32_t* marks);
std::size_t select_below(std::span<const std::uint64_t> draws, std::uint64_t threshold,
                         std::uint32_t base, std::vector<std::uint32_t>& out);
}  // namespace scalar

#if defined(BIHOLE_HAVE_AVX2)
namespace avx2 {
std::size_t count_marked(std::span<const std::uint32_t> indices, const std::uint32_t* marks);
std::size_t select_below(std::span<const std::uint64_t> draws, std::uint64_t threshold,
                         std::uint32_t base, std::vector<std::uint32_t>& out);
}  // namespace avx2
#endif

}  // namespace bihole::simd
