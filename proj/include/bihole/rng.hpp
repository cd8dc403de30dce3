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

#include <bit>
#include <cmath>
#include <cstdint>
#include <span>

namespace bihole {

/// Seed for every randomized routine. Same seed and same parameters give
/// bit-identical output.
struct Seed {
  std::uint64_t value = 0;
  friend bool operator==(Seed, Seed) = default;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Stream tags. Each randomized phase draws from its own stream so that
/// changing one phase never shifts the draws of another.
enum class Stream : std::uint64_t {
  Gnnp = 1,
  BiholeSample = 2,
  ColorLeft = 3,
  ColorRight = 4,
  SelectSU = 5,
  Coupon = 6,
  Retry = 7,
  Bench = 8,
};

/// Stream splitting rule: derive(seed, tag, k) = mix64(mix64(seed ^ mix64(tag)) + k).
constexpr Seed derive(Seed seed, Stream tag, std::uint64_t k = 0) noexcept {
  return Seed{mix64(mix64(seed.value ^ mix64(static_cast<std::uint64_t>(tag))) + k)};
}

/// xoshiro256** 1.0, state filled by successive SplitMix64 outputs of the seed.
class Rng {
 public:
  explicit Rng(Seed seed) noexcept {
    std::uint64_t x = seed.value;
    for (auto& word : s_) {
      word = mix64(x);
      x += 0x9E3779B97F4A7C15ULL;
    }
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
  }

  void fill(std::span<std::uint64_t> out) noexcept {
    for (auto& x : out) x = next();
  }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Bernoulli(p) as (next() >> 11) < bernoulli_threshold(p).
  bool bernoulli(std::uint64_t threshold) noexcept { return (next() >> 11) < threshold; }

  /// Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift with
  /// rejection, so the result is exactly uniform.
  std::uint64_t below(std::uint64_t bound) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t floor = (0 - bound) % bound;
      while (low < floor) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t s_[4];
};

/// Integer threshold T with uniform() < p  <=>  (x >> 11) < T.
/// T = ceil(p * 2^53), clamped to [0, 2^53].
inline std::uint64_t bernoulli_threshold(double p) noexcept {
  if (!(p > 0.0)) return 0;
  if (p >= 1.0) return std::uint64_t{1} << 53;
  return static_cast<std::uint64_t>(std::ceil(std::ldexp(p, 53)));
}

}  // namespace bihole
