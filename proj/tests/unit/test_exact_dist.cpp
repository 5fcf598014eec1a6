// Copyright 2026 The cuetrunc Authors.
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

#include "cuetrunc/exact_dist.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "cuetrunc/special_fn.hpp"

namespace cuetrunc {
namespace {

TEST(RadiusCdf, ClosedFormSmallCase) {
  // I_{1/2}(1, 2) I_{1/2}(2, 2) = 0.75 * 0.5
  const EnsembleSpec s(4, 2);
  EXPECT_NEAR(radius_cdf(s, std::sqrt(0.5)), 0.375, 1e-14);
  EXPECT_EQ(radius_cdf(s, 1.0), 1.0);
  EXPECT_EQ(radius_cdf(s, 0.0), 0.0);
  EXPECT_THROW(radius_cdf(s, 1.5), std::domain_error);
}

TEST(RadiusCdf, SingleFactorClosedForm) {
  // p = 1: 1 - (1 - r^2)^k
  for (std::int64_t k : {1, 5, 80}) {
    const EnsembleSpec s = EnsembleSpec::from_depth(k + 1, k);
    for (double r : {0.1, 0.5, 0.93}) {
      EXPECT_NEAR(radius_cdf(s, r), -std::expm1(static_cast<double>(k) * std::log1p(-r * r)), 1e-14);
    }
  }
}

class RecurrenceVsReference : public ::testing::TestWithParam<std::pair<std::int64_t, std::int64_t>> {};

TEST_P(RecurrenceVsReference, Agree) {
  const auto [n, k] = GetParam();
  const EnsembleSpec s = EnsembleSpec::from_depth(n, k);
  for (double q : {0.001, 0.05, 0.3, 0.5, 0.7, 0.95, 0.999}) {
    const double r = radius_quantile(s, q);
    const double ref = radius_cdf_reference(s, r);
    // Near r = 1 the cdf is ill-conditioned in r; scale with n.
    const double tol = 2e-10 * std::max(1.0, static_cast<double>(n) / 1e4);
    EXPECT_NEAR(radius_cdf(s, r) / ref, 1.0, tol) << "n=" << n << " k=" << k << " q=" << q;
  }
}

INSTANTIATE_TEST_SUITE_P(Specs, RecurrenceVsReference,
                         ::testing::Values(std::pair<std::int64_t, std::int64_t>{32, 8},
                                           std::pair<std::int64_t, std::int64_t>{500, 40},
                                           std::pair<std::int64_t, std::int64_t>{5000, 64},
                                           std::pair<std::int64_t, std::int64_t>{2000, 1},
                                           std::pair<std::int64_t, std::int64_t>{1000, 500},
                                           std::pair<std::int64_t, std::int64_t>{100000, 133}));

TEST(RadiusCdf, FactorsMatchBetaCdfAndDecreaseInShape) {
  const EnsembleSpec s = EnsembleSpec::from_depth(300, 25);
  for (double r : {0.6, 0.9, 0.98}) {
    const auto f = radius_cdf_log_factors(s, r);
    ASSERT_EQ(f.size(), 275u);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double direct = reg_inc_beta_I(r * r, static_cast<double>(i + 1), 25.0);
      EXPECT_NEAR(std::exp(f[i]), direct, 1e-12 * std::max(direct, 1e-3)) << i;
      if (i > 0) {
        EXPECT_LE(f[i], f[i - 1] + 1e-15) << i;
      }
    }
  }
}

TEST(RadiusCdf, LogDomainTail) {
  const EnsembleSpec s = EnsembleSpec::from_depth(5000, 64);
  const double l = log_radius_cdf(s, 0.9);
  EXPECT_TRUE(std::isfinite(l));
  EXPECT_LT(l, -700.0);
  EXPECT_EQ(radius_cdf(s, 0.9), std::exp(l));
}

TEST(RadiusQuantile, Inversion) {
  const EnsembleSpec s(4, 2);
  EXPECT_NEAR(radius_quantile(s, 0.375), std::sqrt(0.5), 1e-9);
  const EnsembleSpec big = EnsembleSpec::from_depth(500, 40);
  double previous = 0.0;
  for (double q : {0.1, 0.5, 0.9}) {
    const double r = radius_quantile(big, q);
    EXPECT_NEAR(radius_cdf(big, r), q, 1e-10);
    EXPECT_GT(r, previous);
    previous = r;
  }
  EXPECT_NEAR(radius_quantile(big, 0.5, constants_thm4(big)), radius_quantile(big, 0.5), 1e-9);
  EXPECT_THROW(radius_quantile(big, 1.0), std::domain_error);
}

TEST(StandardizedCdf, MonotoneAndClamped) {
  const EnsembleSpec s = EnsembleSpec::from_depth(32000, 108);
  const Normalization nm = constants_thm4(s);
  double previous = 0.0;
  for (double x = -3.0; x <= 6.0; x += 0.5) {
    const double v = standardized_cdf(s, nm, x).value;
    EXPECT_GE(v, previous);
    previous = v;
  }
  EXPECT_GT(standardized_cdf(s, nm, 30.0).value, 1.0 - 1e-9);
  const double beyond = (1.0 - nm.A) / nm.B + 1.0;
  const StandardizedCdf c = standardized_cdf(s, nm, beyond);
  EXPECT_TRUE(c.clamped);
  EXPECT_EQ(c.value, 1.0);
  EXPECT_FALSE(standardized_cdf(s, nm, 0.0).clamped);
}

TEST(StandardizedCdf, FiniteSizeValueAtZero) {
  // Independent evaluation (scipy betainc product at the same A, B) gives
  // G_n(0) = 0.45962 at this size, about 0.09 above exp(-1).
  const EnsembleSpec s = EnsembleSpec::from_depth(32000, 108);
  const double v = standardized_cdf(s, constants_thm4(s), 0.0).value;
  EXPECT_NEAR(v, 0.45962, 5e-5);
}

}  // namespace
}  // namespace cuetrunc
