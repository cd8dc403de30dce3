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

#include <atomic>
#include <cstdlib>
#include <string>

#include "bihole/simd/kernels.hpp"

namespace bihole::simd {

namespace {

Isa detect() {
  if (const char* env = std::getenv("BIHOLE_LAB_SIMD")) {
    if (std::string(env) == "scalar") return Isa::Scalar;
  }
  return cpu_supports(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(BIHOLE_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

Isa set_isa(Isa isa) {
  if (!cpu_supports(isa)) isa = Isa::Scalar;
  return current().exchange(isa);
}

std::size_t count_marked(std::span<const std::uint32_t> indices, const std::uint32_t* marks) {
#if defined(BIHOLE_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::count_marked(indices, marks);
#endif
  return scalar::count_marked(indices, marks);
}

std::size_t select_below(std::span<const std::uint64_t> draws, std::uint64_t threshold,
                         std::uint32_t base, std::vector<std::uint32_t>& out) {
#if defined(BIHOLE_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return avx2::select_below(draws, threshold, base, out);
#endif
  return scalar::select_below(draws, threshold, base, out);
}

}  // namespace bihole::simd
