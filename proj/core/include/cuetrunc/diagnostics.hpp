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

#ifndef CUETRUNC_DIAGNOSTICS_HPP_
#define CUETRUNC_DIAGNOSTICS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cuetrunc/limit_laws.hpp"
#include "cuetrunc/normalization.hpp"
#include "cuetrunc/sampler.hpp"

namespace cuetrunc {

// ---------------------------------------------------------------------------
// Kolmogorov-Smirnov

/// sup_i max(i/N - F(s_i), F(s_i) - (i-1)/N) over ascending samples s.
/// Throws std::invalid_argument on empty input.
double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf);

/// Two-sample statistic sup |F_a - F_b|; inputs need not be sorted.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic critical value sqrt(-log(alpha/2) / 2) / sqrt(n); about
/// 1.36/sqrt(n) at alpha = 0.05.
double ks_critical_value(double alpha, std::size_t n);
double ks_two_sample_critical_value(double alpha, std::size_t n, std::size_t m);

// ---------------------------------------------------------------------------
// Reports

struct GofReport {
  double ks_statistic = 0.0;       // 0 when no sample was drawn
  double sup_grid_distance = 0.0;  // exact route, no sampling
  std::size_t sample_count = 0;
  std::size_t excluded = 0;  // matrix-oracle draws dropped for nonconvergence
  std::vector<double> grid;
  LimitLaw law;
  EnsembleSpec spec;
  Normalization normalization;
};

enum class LemmaId { kL5, kL6, kL7, kL8, kL10, kL11, kL12, kL13 };

std::string to_string(LemmaId id);

/// Numeric or Monte Carlo check of one lemma-level estimate.
struct LemmaCheck {
  enum class Sense {
    kTwoSided,  // |observed - target| <= tolerance
    kAtMost,    // observed <= target
    kBelow,     // observed < target
    kAbove,     // observed > target
  };

  LemmaId lemma = LemmaId::kL5;
  std::vector<std::pair<std::string, double>> inputs;
  double observed = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  Sense sense = Sense::kTwoSided;
  bool pass = false;
};

// ---------------------------------------------------------------------------
// Helpers shared by the checks

/// Evenly spaced lo, lo + step, ..., up to hi (inclusive within 1e-9 step).
std::vector<double> make_grid(double lo, double hi, double step);

/// k = ceil((log n)^2), the canonical intermediate-regime depth.
std::int64_t depth_log_squared(std::int64_t n);
/// k = max(2, ceil(0.3 log n)), a sub-logarithmic depth.
std::int64_t depth_sub_log(std::int64_t n);

/// m_n = floor(k (log n)^3).
std::int64_t m_n(const EnsembleSpec& spec);
/// j_n = floor(n / sqrt(k delta)) with delta = sqrt(k) (1 - lambda).
std::int64_t j_n(const EnsembleSpec& spec, double lambda);
/// Number of columns j = 1..J entering the minimum / sum: n - m_n when
/// that exceeds j_n, otherwise min(n - 1, ceil(10 n / (k (1 - lambda)))),
/// which keeps all but a factor e^{-10} of the geometric tail.
std::int64_t default_window(const EnsembleSpec& spec, double lambda);

/// sup over grid of |G_n(x) - law(x)| using the exact product cdf.
double sup_grid_distance(const EnsembleSpec& spec, const Normalization& norm,
                         const LimitLaw& law, std::span<const double> grid);

// ---------------------------------------------------------------------------
// Lemma checks

/// Per spec two checks: sqrt(k)(1 - lambda_n) strictly above the previous
/// spec's value (the first one against 0), and
/// k (1 - lambda_n)^2 < 2 log(n sqrt(k) / (2 pi)).
std::vector<LemmaCheck> check_lemma5(std::span<const EnsembleSpec> specs);

/// |(1 - lambda_n(x)) / (1 - lambda_n) - 1|; with uniform = true the max over
/// lambda_{n,j}(x), 1 <= j <= j_n, replaces lambda_n(x).
LemmaCheck check_lemma6(const EnsembleSpec& spec, double x, bool uniform = false,
                        double tolerance = 0.2);

/// phi(k, lambda_n(x)) / (1 - lambda_n)^2 * n / (k e^x) against 1.
LemmaCheck check_lemma7(const EnsembleSpec& spec, double x, double tolerance = 0.1);

/// sum_{j <= j_count} P(k, k lambda_{n,j}(x)) against e^x, tolerance
/// relative to e^x. j_count defaults to default_window.
LemmaCheck check_lemma8(const EnsembleSpec& spec, double x,
                        std::optional<std::int64_t> j_count = std::nullopt,
                        double tolerance = 0.1);

/// Monte Carlo P(Y_{n1}^2 > 1 - (k/n) lambda_n(-x)) with Y_{n1}^2 = 1 - S/T,
/// S ~ Gamma(k), T = S + Gamma(p). One-sided: estimate <= threshold.
LemmaCheck check_lemma10(const EnsembleSpec& spec, double x, std::size_t samples,
                         std::uint64_t seed, double threshold = 0.02);

/// Monte Carlo max over trials of max_{m <= j <= n} |T_j / j - 1| sqrt(m / log n)
/// with T_j partial sums of one exponential sequence. One-sided: <= threshold.
/// Throws std::invalid_argument unless 1 <= m <= n <= 10^6 and trials >= 1.
LemmaCheck check_lemma11(std::int64_t n, std::int64_t m, std::size_t trials,
                         std::uint64_t seed, double threshold = 4.0);

/// Monte Carlo L_n = (min_{j <= J} S_j/(n+1-j) - k lambda_n / n) / alpha_n,
/// alpha_n = lambda_n / (n (1 - lambda_n)), against the minimum-Gumbel law.
/// ks_statistic is the sampled distance; sup_grid_distance is the exact
/// distance 1 - prod_j (1 - P(k, k lambda_{n,j}(x))) vs Lambda_1 on grid.
GofReport check_lemma12(const EnsembleSpec& spec, std::size_t samples, std::uint64_t seed,
                        std::optional<std::int64_t> window = std::nullopt,
                        std::vector<double> grid = make_grid(-4.0, 4.0, 0.1),
                        std::size_t workers = 0);

/// Exact sup-grid distance between the law of
/// (max_{j <= J} Y_{nj}^2 - (1 - k lambda_n / n)) / alpha_n and Lambda.
LemmaCheck check_lemma13(const EnsembleSpec& spec, std::span<const double> grid,
                         double tolerance = 0.1);

// ---------------------------------------------------------------------------
// Goodness of fit and convergence tables

/// KS distance of raw radii to the exact radius cdf of spec.
double ks_against_radius_cdf(const EnsembleSpec& spec, std::vector<double> radii);

/// Draws count radii with method, standardizes them by norm and measures the
/// KS distance to norm.law; sup_grid_distance is the exact route on grid.
GofReport goodness_of_fit(const EnsembleSpec& spec, const Normalization& norm,
                          SampleMethod method, std::size_t count, std::uint64_t seed,
                          std::span<const double> grid, std::size_t workers = 0);

using NormalizationRule = std::function<Normalization(const EnsembleSpec&)>;

/// One report per spec: exact sup-grid distance and, when samples > 0, the
/// KS distance of standardized BetaMax draws to the law.
std::vector<GofReport> convergence_table(std::span<const EnsembleSpec> specs,
                                         const NormalizationRule& rule, const LimitLaw& law,
                                         std::span<const double> grid, std::size_t samples = 0,
                                         std::uint64_t seed = 0, std::size_t workers = 0);

}  // namespace cuetrunc

#endif  // CUETRUNC_DIAGNOSTICS_HPP_
