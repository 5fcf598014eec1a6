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

#include "cuetrunc/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cuetrunc/special_fn.hpp"

namespace cuetrunc {

namespace {

constexpr int kMaxRootIterations = 200;
constexpr double kLambdaResidualTarget = 1e-14;
constexpr double kLambdaResidualLimit = 1e-12;

// Bisection point for an open bracket inside (0, 1) whose ends may be the
// boundary itself; approaches 0 or 1 geometrically.
double split_unit_interval(double lo, double hi) {
  if (lo <= 0.0) return hi * 0.0625;
  if (hi >= 1.0) return 1.0 - (1.0 - lo) * 0.0625;
  const double logit = 0.5 * (std::log(lo / (1.0 - lo)) + std::log(hi / (1.0 - hi)));
  const double mid = 1.0 / (1.0 + std::exp(-logit));
  return (mid > lo && mid < hi) ? mid : 0.5 * (lo + hi);
}

}  // namespace

EnsembleSpec::EnsembleSpec(std::int64_t n, std::int64_t p) : n_(n), p_(p) {
  if (n < 2) throw std::domain_error("EnsembleSpec: n must be >= 2");
  if (p < 1 || p >= n) throw std::domain_error("EnsembleSpec: p must satisfy 1 <= p < n");
}

std::string to_string(RegimeLabel regime) {
  switch (regime) {
    case RegimeLabel::kThm1Combined:
      return "thm1";
    case RegimeLabel::kThm2SubLog:
      return "thm2";
    case RegimeLabel::kThm3FixedK:
      return "thm3";
    case RegimeLabel::kThm4Intermediate:
      return "thm4";
    case RegimeLabel::kAmbiguous:
      return "ambiguous";
  }
  return "ambiguous";
}

std::optional<RegimeLabel> parse_regime(std::string_view text) {
  if (text == "thm1") return RegimeLabel::kThm1Combined;
  if (text == "thm2") return RegimeLabel::kThm2SubLog;
  if (text == "thm3") return RegimeLabel::kThm3FixedK;
  if (text == "thm4") return RegimeLabel::kThm4Intermediate;
  return std::nullopt;
}

double g_n(const EnsembleSpec& spec, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::domain_error("g_n: lambda must lie in (0, 1)");
  return tau(lambda) + 2.0 / static_cast<double>(spec.k()) * std::log1p(-lambda);
}

double g_n_derivative(const EnsembleSpec& spec, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::domain_error("g_n_derivative: lambda must lie in (0, 1)");
  }
  return 1.0 - 1.0 / lambda - 2.0 / (static_cast<double>(spec.k()) * (1.0 - lambda));
}

double lambda_rhs(const EnsembleSpec& spec, LambdaConvention convention) {
  const double k = static_cast<double>(spec.k());
  const double n = static_cast<double>(spec.n());
  const double constant = convention == LambdaConvention::kCorrected
                              ? 0.5 * std::log(2.0 * std::numbers::pi)
                              : std::log(2.0 * std::numbers::pi);
  return (std::log(n) - constant - 1.5 * std::log(k)) / k;
}

LambdaSolution solve_lambda(const EnsembleSpec& spec, LambdaConvention convention) {
  const double rhs = lambda_rhs(spec, convention);
  auto f = [&](double l) { return g_n(spec, l) - rhs; };

  double lo = 0.0;  // f > 0 to the left of the root
  double hi = 1.0;
  double x = 0.5;
  double best = x;
  double best_residual = std::fabs(f(x));
  for (int iter = 1; iter <= kMaxRootIterations; ++iter) {
    const double fx = f(x);
    if (std::fabs(fx) < best_residual || iter == 1) {
      best = x;
      best_residual = std::fabs(fx);
    }
    if (best_residual <= kLambdaResidualTarget) {
      return {best, best_residual, iter};
    }
    if (fx > 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (lo > 0.0 && hi < 1.0 && hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
      break;
    }
    const double newton = x - fx / g_n_derivative(spec, x);
    x = (newton > lo && newton < hi) ? newton : split_unit_interval(lo, hi);
  }
  if (best_residual <= kLambdaResidualLimit) return {best, best_residual, kMaxRootIterations};
  throw ConvergenceError("solve_lambda: no root with residual <= 1e-12 for n=" +
                         std::to_string(spec.n()) + " k=" + std::to_string(spec.k()));
}

double thm1_a(double y) {
  if (!(y > 3.0)) throw std::domain_error("thm1_a: defined only for y > 3");
  const double ly = std::log(y);
  return std::sqrt(ly) - std::log(std::sqrt(2.0 * std::numbers::pi) * ly) / std::sqrt(ly);
}

double thm1_b(double y) {
  if (!(y > 3.0)) throw std::domain_error("thm1_b: defined only for y > 3");
  return 1.0 / std::sqrt(std::log(y));
}

Normalization constants_thm1(const EnsembleSpec& spec) {
  const double n = static_cast<double>(spec.n());
  const double c2 = static_cast<double>(spec.p() - 1) / (n - 1.0);
  if (!(c2 > 0.0)) throw std::domain_error("constants_thm1: requires p >= 2");
  const double y = n * c2 / (1.0 - c2);
  if (!(y > 3.0)) throw std::domain_error("constants_thm1: requires n c^2 / (1 - c^2) > 3");
  const double scale = 0.5 * std::sqrt(1.0 - c2) / std::sqrt(n - 1.0);
  Normalization out;
  out.A = std::sqrt(c2) + scale * thm1_a(y);
  out.B = scale * thm1_b(y);
  out.law = LimitLaw::gumbel();
  out.regime = RegimeLabel::kThm1Combined;
  return out;
}

Normalization constants_thm2(const EnsembleSpec& spec) {
  const double k = static_cast<double>(spec.k());
  const double n = static_cast<double>(spec.n());
  const double target = k / n;
  const double log_target = std::log(target);
  const double log_gamma_k = ln_gamma(k);
  auto f = [&](double a) { return log_reg_inc_gamma_P(k, a) - log_target; };

  // P(k, .) is increasing; grow the upper end until it brackets the root.
  double lo = 0.0;
  double hi = k;
  while (f(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  double a = 0.5 * (lo + hi);
  int iter = 1;
  for (; iter <= kMaxRootIterations; ++iter) {
    const double fa = f(a);
    if (std::fabs(fa) <= 1e-14) break;
    if (fa < 0.0) {
      lo = a;
    } else {
      hi = a;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    // d log P / da = density / P
    const double log_density = (k - 1.0) * std::log(a) - a - log_gamma_k;
    const double slope = std::exp(log_density - log_reg_inc_gamma_P(k, a));
    const double newton = a - fa / slope;
    a = (newton > lo && newton < hi) ? newton : (lo > 0.0 ? 0.5 * (lo + hi) : hi * 0.0625);
  }
  const double residual = std::fabs(reg_inc_gamma_P(k, a) - target);
  if (!(residual <= 1e-12)) {
    throw ConvergenceError("constants_thm2: root of P(k, a) = k/n did not converge");
  }
  Normalization out;
  out.A = std::sqrt(1.0 - a / n);
  out.B = a / (2.0 * n * k);
  out.law = LimitLaw::gumbel();
  out.regime = RegimeLabel::kThm2SubLog;
  out.gamma_root = GammaRootSolution{a, residual, std::min(iter, kMaxRootIterations)};
  return out;
}

Normalization constants_thm3(const EnsembleSpec& spec) {
  const double k = static_cast<double>(spec.k());
  const double n = static_cast<double>(spec.n());
  // ((k+1)!)^{1/k} / (2 n^{1 + 1/k}), with the factorial in log domain.
  const double log_b = ln_gamma(k + 2.0) / k - (1.0 + 1.0 / k) * std::log(n) - std::log(2.0);
  Normalization out;
  out.A = 1.0;
  out.B = std::exp(log_b);
  out.law = LimitLaw::reversed_weibull(static_cast<int>(spec.k()));
  out.regime = RegimeLabel::kThm3FixedK;
  return out;
}

Normalization constants_thm4(const EnsembleSpec& spec, LambdaConvention convention) {
  const LambdaSolution sol = solve_lambda(spec, convention);
  const double k = static_cast<double>(spec.k());
  const double n = static_cast<double>(spec.n());
  Normalization out;
  out.A = std::sqrt(1.0 - k * sol.lambda / n);
  out.B = sol.lambda / (2.0 * out.A * n * (1.0 - sol.lambda));
  out.law = LimitLaw::gumbel();
  out.regime = RegimeLabel::kThm4Intermediate;
  out.lambda = sol;
  return out;
}

RegimeLabel classify_regime(const EnsembleSpec& spec) {
  const double n = static_cast<double>(spec.n());
  const double k = static_cast<double>(spec.k());
  const double log_n = std::log(n);
  const double log_n3 = log_n * log_n * log_n;
  const bool fixed_k = k <= 8.0;
  const bool sub_log = k <= 0.5 * log_n;
  if (fixed_k && sub_log) return RegimeLabel::kAmbiguous;
  if (fixed_k) return RegimeLabel::kThm3FixedK;
  if (sub_log) return RegimeLabel::kThm2SubLog;
  if (k >= 2.0 * log_n && k * log_n3 <= n) return RegimeLabel::kThm4Intermediate;
  if (spec.p() >= 16 && (k >= 10.0 * log_n3 || k >= 0.1 * n)) {
    return RegimeLabel::kThm1Combined;
  }
  return RegimeLabel::kAmbiguous;
}

std::vector<RegimeLabel> candidate_regimes(const EnsembleSpec& spec) {
  const double n = static_cast<double>(spec.n());
  const double k = static_cast<double>(spec.k());
  const double log_n = std::log(n);
  std::vector<RegimeLabel> out;
  if (spec.p() >= 16 && k >= log_n * log_n * log_n) out.push_back(RegimeLabel::kThm1Combined);
  if (k <= log_n) out.push_back(RegimeLabel::kThm2SubLog);
  if (k <= 8.0) out.push_back(RegimeLabel::kThm3FixedK);
  if (k >= 0.5 * log_n && k * log_n <= n) out.push_back(RegimeLabel::kThm4Intermediate);
  std::erase_if(out, [&](RegimeLabel r) {
    try {
      normalize(spec, r);
      return false;
    } catch (const std::exception&) {
      return true;
    }
  });
  return out;
}

Normalization normalize(const EnsembleSpec& spec, RegimeLabel regime) {
  switch (regime) {
    case RegimeLabel::kThm1Combined:
      return constants_thm1(spec);
    case RegimeLabel::kThm2SubLog:
      return constants_thm2(spec);
    case RegimeLabel::kThm3FixedK:
      return constants_thm3(spec);
    case RegimeLabel::kThm4Intermediate:
      return constants_thm4(spec);
    case RegimeLabel::kAmbiguous:
      break;
  }
  throw std::invalid_argument("normalize: regime is ambiguous; force one of thm1..thm4");
}

double lambda_shift(const EnsembleSpec& spec, double lambda, double x) {
  const double k = static_cast<double>(spec.k());
  const double shifted = lambda * (1.0 + x / (k * (1.0 - lambda)));
  if (!(shifted > 0.0 && shifted < 1.0)) {
    throw std::range_error("lambda_shift: shifted lambda leaves (0, 1); |x| too large for this n");
  }
  return shifted;
}

double lambda_nj(const EnsembleSpec& spec, double lambda_x, std::int64_t j) {
  if (j < 1 || j > spec.n() - 1) throw std::out_of_range("lambda_nj: j must lie in [1, n-1]");
  const double n = static_cast<double>(spec.n());
  return (n + 1.0 - static_cast<double>(j)) / n * lambda_x;
}

}  // namespace cuetrunc
