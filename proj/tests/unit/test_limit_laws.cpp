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

#include "cuetrunc/limit_laws.hpp"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "cuetrunc/diagnostics.hpp"

namespace cuetrunc {
namespace {

TEST(LawCdf, AnchorPoints) {
  EXPECT_NEAR(law_cdf(LimitLaw::gumbel(), 0.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(law_cdf(LimitLaw::gumbel(), 0.0), 0.3678794, 1e-7);
  EXPECT_EQ(law_cdf(LimitLaw::reversed_weibull(2), 0.0), 1.0);
  EXPECT_EQ(law_cdf(LimitLaw::reversed_weibull(2), 3.0), 1.0);
  EXPECT_NEAR(law_cdf(LimitLaw::reversed_weibull(2), -1.5), std::exp(-2.25), 1e-15);
  EXPECT_NEAR(law_cdf(LimitLaw::gumbel_min(), 0.0), 1.0 - std::exp(-1.0), 1e-15);
}

TEST(LawCdf, GumbelMinIsReflection) {
  for (double x = -5.0; x <= 5.0; x += 0.25) {
    EXPECT_NEAR(law_cdf(LimitLaw::gumbel_min(), x), 1.0 - law_cdf(LimitLaw::gumbel(), -x), 1e-15);
  }
}

TEST(LawDensity, IntegratesToCdf) {
  for (const LimitLaw law : {LimitLaw::gumbel(), LimitLaw::reversed_weibull(3), LimitLaw::gumbel_min()}) {
    const double a = -1.2;
    const double b = -0.4;
    const int panels = 2000;
    const double h = (b - a) / panels;
    double sum = law_density(law, a) + law_density(law, b);
    for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * law_density(law, a + i * h);
    EXPECT_NEAR(sum * h / 3.0, law_cdf(law, b) - law_cdf(law, a), 1e-12) << law.name();
  }
}

TEST(LawQuantile, Inversion) {
  EXPECT_NEAR(law_quantile(LimitLaw::gumbel(), std::exp(-1.0)), 0.0, 1e-15);
  EXPECT_NEAR(law_quantile(LimitLaw::reversed_weibull(1), std::exp(-1.0)), -1.0, 1e-15);
  for (const LimitLaw law : {LimitLaw::gumbel(), LimitLaw::reversed_weibull(1),
                             LimitLaw::reversed_weibull(4), LimitLaw::gumbel_min()}) {
    for (double q : {0.01, 0.5, 0.99}) {
      EXPECT_NEAR(law_cdf(law, law_quantile(law, q)), q, 1e-12) << law.name();
    }
  }
  EXPECT_THROW(law_quantile(LimitLaw::gumbel(), 0.0), std::domain_error);
  EXPECT_THROW(law_quantile(LimitLaw::gumbel(), 1.0), std::domain_error);
}

TEST(LimitLaw, Validation) {
  EXPECT_THROW(LimitLaw::reversed_weibull(0), std::domain_error);
  EXPECT_EQ(LimitLaw::reversed_weibull(3).name(), "reversed_weibull_3");
  EXPECT_EQ(LimitLaw::gumbel().name(), "gumbel");
}

TEST(LawSample, DeterministicAndCalibrated) {
  const auto a = law_sample(LimitLaw::gumbel(), 100000, 42);
  const auto b = law_sample(LimitLaw::gumbel(), 100000, 42);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, law_sample(LimitLaw::gumbel(), 100000, 43));
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  const double ks = ks_statistic(sorted, [](double x) { return law_cdf(LimitLaw::gumbel(), x); });
  EXPECT_LE(ks, 0.006);
}

TEST(LawSample, ReversedWeibullSupport) {
  for (const double v : law_sample(LimitLaw::reversed_weibull(2), 10000, 3)) EXPECT_LE(v, 0.0);
}

}  // namespace
}  // namespace cuetrunc
