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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cuetrunc/special_fn.hpp"

namespace cuetrunc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kQuantileTolerance = 1e-10;
constexpr double kUnderflowGuard = 1e-250;

void require_radius(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("radius must lie in [0, 1]");
}

// log I_t(p, k). Falls back to I_p = sum_{j >= p} T_j when the direct value
// underflows; there T_{j+1} / T_j = t (j + k) / (j + 1) < 1.
double log_lower_tail_at(double t, std::int64_t p, double k, double log_step_p) {
  const double direct = reg_inc_beta(t, static_cast<double>(p), k).lower;
  if (direct > kUnderflowGuard) return std::log(direct);
  double sum = 1.0;
  double term = 1.0;
  for (double j = static_cast<double>(p); term > 1e-17 * sum; j += 1.0) {
    term *= t * (j + k) / (j + 1.0);
    sum += term;
  }
  return log_step_p + std::log(sum);
}

}  // namespace

std::vector<double> radius_cdf_log_factors(const EnsembleSpec& spec, double r) {
  require_radius(r);
  const std::int64_t p = spec.p();
  const double k = static_cast<double>(spec.k());
  std::vector<double> log_factor(static_cast<std::size_t>(p), 0.0);
  if (r == 1.0) return log_factor;
  if (r == 0.0) {
    std::fill(log_factor.begin(), log_factor.end(), kNegInf);
    return log_factor;
  }
  const double t = r * r;
  const double log_t = 2.0 * std::log(r);
  const double log_one_minus_t = std::log1p(-r) + std::log1p(r);

  // log T_i for i = 1..p (index i - 1).
  std::vector<double> log_step(static_cast<std::size_t>(p));
  log_step[0] = log_t + k * log_one_minus_t + std::log(k);
  for (std::int64_t i = 1; i < p; ++i) {
    const double di = static_cast<double>(i);
    log_step[i] = log_step[i - 1] + log_t + std::log((di + k) / (di + 1.0));
  }

  // Forward: Q_1 = (1 - t)^k, Q_{i+1} = Q_i + T_i, while Q stays <= 1/2.
  double upper = std::exp(k * log_one_minus_t);
  std::int64_t split = 0;  // factors [0, split) come from the upper tail
  while (split < p && upper <= 0.5) {
    log_factor[split] = std::log1p(-upper);
    upper += std::exp(log_step[split]);
    ++split;
  }
  if (split == p) return log_factor;

  // Backward: I_p, then I_i = I_{i+1} + T_i, in log domain.
  double log_lower = log_lower_tail_at(t, p, k, log_step[p - 1]);
  log_factor[p - 1] = log_lower;
  for (std::int64_t i = p - 1; i > split; --i) {
    const double a = std::max(log_lower, log_step[i - 1]);
    log_lower = a + std::log(std::exp(log_lower - a) + std::exp(log_step[i - 1] - a));
    log_factor[i - 1] = log_lower;
  }
  return log_factor;
}

double log_radius_cdf(const EnsembleSpec& spec, double r) {
  double sum = 0.0;
  for (double v : radius_cdf_log_factors(spec, r)) sum += v;
  return sum;
}

double radius_cdf(const EnsembleSpec& spec, double r) { return std::exp(log_radius_cdf(spec, r)); }

double radius_cdf_reference(const EnsembleSpec& spec, double r) {
  require_radius(r);
  const double t = r * r;
  const double k = static_cast<double>(spec.k());
  double sum = 0.0;
  for (std::int64_t i = 1; i <= spec.p(); ++i) {
    const Tails tails = reg_inc_beta(t, static_cast<double>(i), k);
    sum += tails.lower <= tails.upper ? std::log(tails.lower) : std::log1p(-tails.upper);
  }
  return std::exp(sum);
}

double radius_quantile(const EnsembleSpec& spec, double q,
                       const std::optional<Normalization>& bracket) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("radius_quantile: q must lie in (0, 1)");
  double lo = 0.0;
  double hi = 1.0;
  if (bracket) {
    const double a = std::max(0.0, bracket->A - 10.0 * bracket->B);
    const double b = std::min(1.0, bracket->A + 10.0 * bracket->B);
    if (a < b && radius_cdf(spec, a) <= q && radius_cdf(spec, b) >= q) {
      lo = a;
      hi = b;
    }
  }
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double value = radius_cdf(spec, mid);
    if (std::fabs(value - q) <= kQuantileTolerance) return mid;
    if (value < q) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= std::numeric_limits<double>::epsilon()) break;
  }
  return mid;
}

StandardizedCdf standardized_cdf(const EnsembleSpec& spec, const Normalization& norm, double x) {
  const double r = norm.A + norm.B * x;
  if (r <= 0.0) return {0.0, r < 0.0};
  if (r >= 1.0) return {1.0, r > 1.0};
  return {radius_cdf(spec, r), false};
}

}  // namespace cuetrunc
