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

#include <cmath>

#include "bihole/coloring.hpp"
#include "bihole/coupon.hpp"
#include "bihole/errors.hpp"
#include "bihole/generators.hpp"

namespace bihole {
namespace {

TEST(Coupon, SingleColor) {
  const CouponStats s = coupon_sim(1, 1, 1000, Seed{1});
  EXPECT_DOUBLE_EQ(s.mean_T, 1.0);
  EXPECT_DOUBLE_EQ(s.var_T, 0.0);
  EXPECT_DOUBLE_EQ(s.p_hat, 1.0);
}

TEST(Coupon, TwoColorsMean) {
  const CouponStats s = coupon_sim(2, 0, 100000, Seed{1});
  EXPECT_NEAR(s.mean_T, 3.0, 0.15);
  // Var T for q = 2 is sum_k (1 - p_k) / p_k^2 = 0 + (1/2) / (1/4) = 2
  EXPECT_NEAR(s.var_T, 2.0, 0.1);
}

TEST(Coupon, TwentyColors) {
  const CouponStats s = coupon_sim(20, 64, 100000, Seed{3});
  EXPECT_LT(s.var_T, 800.0);
  EXPECT_GE(s.mean_T, 0.95 * 20 * std::log(20.0));
  EXPECT_NEAR(s.mean_T, coupon_expected_time(20), 0.01 * coupon_expected_time(20));
  // P[T <= 64] for q = 20 by inclusion-exclusion is 0.44177
  EXPECT_NEAR(s.p_hat, 0.44177, 0.01);
}

TEST(Coupon, ExpectedTime) {
  EXPECT_DOUBLE_EQ(coupon_expected_time(1), 1.0);
  EXPECT_DOUBLE_EQ(coupon_expected_time(2), 3.0);
  EXPECT_NEAR(coupon_expected_time(20), 71.9548, 1e-4);
}

TEST(Coupon, RejectsDegenerate) {
  EXPECT_THROW(coupon_sim(0, 1, 10, Seed{1}), DomainError);
  EXPECT_THROW(coupon_sim(2, 1, 0, Seed{1}), DomainError);
}

// Q_v is empty exactly when v's d(v) neighbor colors, which are independent
// uniform draws, already cover all q colors: the coupon event T <= d(v).
// On a d-regular graph the fraction of uncolored right vertices therefore
// estimates the same probability as the simulation.
TEST(Coupon, EmptyListsTrackCouponTime) {
  const std::uint32_t q = 12, d = 30;
  const auto g = circulant(20000, d);
  const CouponStats s = coupon_sim(q, d, 100000, Seed{2});
  double total = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto left = phase1_color_U(g.left_count(), q, derive(Seed{seed}, Stream::ColorLeft));
    const RightColoring rc = phase2_color_V(g, left, q, derive(Seed{seed}, Stream::ColorRight));
    total += static_cast<double>(rc.uncolored.size()) / g.right_count();
  }
  EXPECT_NEAR(total / 5, s.p_hat, 0.01);
}

}  // namespace
}  // namespace bihole
