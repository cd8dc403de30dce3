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

#include "bihole/rng.hpp"

namespace bihole {

/// Empirical statistics of the coupon-collector time T: the number of
/// uniform draws from q colors until all q have appeared.
struct CouponStats {
  std::uint32_t q = 0;
  std::uint32_t delta = 0;
  std::uint64_t trials = 0;
  double p_hat = 0;   // fraction of trials with T <= delta
  double mean_T = 0;
  double var_T = 0;   // unbiased sample variance (0 for a single trial)
};

/// Throws DomainError for q == 0 or trials == 0.
CouponStats coupon_sim(std::uint32_t q, std::uint32_t delta, std::uint64_t trials, Seed seed);

/// E[T] = q * H_q.
double coupon_expected_time(std::uint32_t q);

}  // namespace bihole
