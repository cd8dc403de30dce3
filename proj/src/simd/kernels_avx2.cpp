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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "bihole/simd/kernels.hpp"

namespace bihole::simd::avx2 {

std::size_t count_marked(std::span<const std::uint32_t> indices, const std::uint32_t* marks) {
  const std::size_t n = indices.size();
  const std::uint32_t* idx = indices.data();
  const auto* base = reinterpret_cast<const int*>(marks);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
    const __m256i m = _mm256_i32gather_epi32(base, vi, 4);
    const __m256i is_zero = _mm256_cmpeq_epi32(m, zero);
    const auto zero_bits =
        static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(is_zero)));
    count += 8 - static_cast<std::size_t>(std::popcount(zero_bits));
  }
  for (; i < n; ++i) count += marks[idx[i]] != 0;
  return count;
}

std::size_t select_below(std::span<const std::uint64_t> draws, std::uint64_t threshold,
                         std::uint32_t base, std::vector<std::uint32_t>& out) {
  const std::size_t before = out.size();
  const std::size_t n = draws.size();
  // draws >> 11 and threshold are both < 2^63, so the signed compare is exact.
  const __m256i t = _mm256_set1_epi64x(static_cast<long long>(threshold));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i a = _mm256_srli_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(draws.data() + i)), 11);
    const __m256i b = _mm256_srli_epi64(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(draws.data() + i + 4)), 11);
    const auto lo = static_cast<unsigned>(
        _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(t, a))));
    const auto hi = static_cast<unsigned>(
        _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(t, b))));
    unsigned bits = lo | (hi << 4);
    while (bits != 0) {
      const int k = std::countr_zero(bits);
      out.push_back(base + static_cast<std::uint32_t>(i + k));
      bits &= bits - 1;
    }
  }
  for (; i < n; ++i) {
    if ((draws[i] >> 11) < threshold) out.push_back(base + static_cast<std::uint32_t>(i));
  }
  return out.size() - before;
}

}  // namespace bihole::simd::avx2
