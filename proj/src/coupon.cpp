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

#include "bihole/coupon.hpp"

#include <vector>

#include "bihole/errors.hpp"

namespace bihole {

CouponStats coupon_sim(std::uint32_t q, std::uint32_t delta, std::uint64_t trials, Seed seed) {
  if (q == 0) throw DomainError("coupon_sim: q must be >= 1");
  if (trials == 0) throw DomainError("coupon_sim: trials must be >= 1");
  Rng rng(derive(seed, Stream::Coupon));
  std::vector<std::uint64_t> seen(q, 0);
  std::uint64_t hits = 0;
  // Welford's running mean / variance.
  double mean = 0, m2 = 0;
  for (std::uint64_t trial = 1; trial <= trials; ++trial) {
    std::uint32_t distinct = 0;
    std::uint64_t t = 0;
    while (distinct < q) {
      ++t;
      auto& slot = seen[rng.below(q)];
      if (slot != trial) {
        slot = trial;
        ++distinct;
      }
    }
    hits += t <= delta;
    const double x = static_cast<double>(t);
    const double d = x - mean;
    mean += d / static_cast<double>(trial);
    m2 += d * (x - mean);
  }
  CouponStats s;
  s.q = q;
  s.delta = delta;
  s.trials = trials;
  s.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
  s.mean_T = mean;
  s.var_T = trials > 1 ? m2 / static_cast<double>(trials - 1) : 0.0;
  return s;
}

double coupon_expected_time(std::uint32_t q) {
  double h = 0;
  for (std::uint32_t j = 1; j <= q; ++j) h += 1.0 / j;
  return q * h;
}

}  // namespace bihole
