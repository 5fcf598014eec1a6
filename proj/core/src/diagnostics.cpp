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

#include "cuetrunc/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cuetrunc/exact_dist.hpp"
#include "cuetrunc/parallel.hpp"
#include "cuetrunc/rng.hpp"
#include "cuetrunc/sampler.hpp"
#include "cuetrunc/special_fn.hpp"

namespace cuetrunc {

namespace {

constexpr std::int64_t kLemma11MaxN = 1000000;
// Summation stops once a term is this small relative to the running total;
// the terms decay at least geometrically in j.
constexpr double kTailCutoff = 1e-22;

bool decide(LemmaCheck::Sense sense, double observed, double target, double tolerance) {
  switch (sense) {
    case LemmaCheck::Sense::kTwoSided:
      return std::fabs(observed - target) <= tolerance;
    case LemmaCheck::Sense::kAtMost:
      return observed <= target;
    case LemmaCheck::Sense::kBelow:
      return observed < target;
    case LemmaCheck::Sense::kAbove:
      return observed > target;
  }
  return false;
}

LemmaCheck finish(LemmaCheck check) {
  check.pass = decide(check.sense, check.observed, check.target, check.tolerance);
  return check;
}

std::vector<std::pair<std::string, double>> spec_inputs(const EnsembleSpec& spec) {
  return {{"n", static_cast<double>(spec.n())},
          {"k", static_cast<double>(spec.k())},
          {"p", static_cast<double>(spec.p())}};
}

// log prod_{j <= window} (1 - P(k, k lambda_{n,j}(x))).
double log_no_exceedance(const EnsembleSpec& spec, double lambda_x, std::int64_t window) {
  const double k = static_cast<double>(spec.k());
  double acc = 0.0;
  for (std::int64_t j = 1; j <= window; ++j) {
    const Tails t = reg_inc_gamma(k, k * lambda_nj(spec, lambda_x, j));
    if (t.lower == 0.0) break;
    acc += t.lower < 0.5 ? std::log1p(-t.lower) : std::log(t.upper);
    if (t.lower < -acc * kTailCutoff) break;
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------

double ks_statistic(std::span<const double> sorted, const std::function<double(double)>& cdf) {
  if (sorted.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  const double count = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / count - f, f - static_cast<double>(i) / count});
  }
  return std::clamp(d, 0.0, 1.0);
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_critical_value(double alpha, std::size_t n) {
  if (!(alpha > 0.0 && alpha < 1.0) || n == 0) {
    throw std::invalid_argument("ks_critical_value: need alpha in (0, 1) and n > 0");
  }
  return std::sqrt(-0.5 * std::log(alpha / 2.0) / static_cast<double>(n));
}

double ks_two_sample_critical_value(double alpha, std::size_t n, std::size_t m) {
  if (m == 0) throw std::invalid_argument("ks_two_sample_critical_value: m must be positive");
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  return ks_critical_value(alpha, 1) * std::sqrt((dn + dm) / (dn * dm));
}

std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::kL5: return "L5";
    case LemmaId::kL6: return "L6";
    case LemmaId::kL7: return "L7";
    case LemmaId::kL8: return "L8";
    case LemmaId::kL10: return "L10";
    case LemmaId::kL11: return "L11";
    case LemmaId::kL12: return "L12";
    case LemmaId::kL13: return "L13";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("make_grid: need finite lo <= hi and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = lo + static_cast<double>(i) * step;
  return grid;
}

std::int64_t depth_log_squared(std::int64_t n) {
  const double l = std::log(static_cast<double>(n));
  return static_cast<std::int64_t>(std::ceil(l * l));
}

std::int64_t depth_sub_log(std::int64_t n) {
  const double l = std::log(static_cast<double>(n));
  return std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(0.3 * l)));
}

std::int64_t m_n(const EnsembleSpec& spec) {
  const double l = std::log(static_cast<double>(spec.n()));
  return static_cast<std::int64_t>(std::floor(static_cast<double>(spec.k()) * l * l * l));
}

std::int64_t j_n(const EnsembleSpec& spec, double lambda) {
  const double k = static_cast<double>(spec.k());
  const double delta = std::sqrt(k) * (1.0 - lambda);
  return static_cast<std::int64_t>(std::floor(static_cast<double>(spec.n()) / std::sqrt(k * delta)));
}

std::int64_t default_window(const EnsembleSpec& spec, double lambda) {
  const std::int64_t n = spec.n();
  const std::int64_t paper_window = n - m_n(spec);
  if (paper_window > j_n(spec, lambda)) return paper_window;
  const double tail = std::ceil(10.0 * static_cast<double>(n) /
                                (static_cast<double>(spec.k()) * (1.0 - lambda)));
  return std::min<std::int64_t>(n - 1, static_cast<std::int64_t>(tail));
}

double sup_grid_distance(const EnsembleSpec& spec, const Normalization& norm,
                         const LimitLaw& law, std::span<const double> grid) {
  double d = 0.0;
  for (const double x : grid) {
    d = std::max(d, std::fabs(standardized_cdf(spec, norm, x).value - law_cdf(law, x)));
  }
  return d;
}

// ---------------------------------------------------------------------------

std::vector<LemmaCheck> check_lemma5(std::span<const EnsembleSpec> specs) {
  std::vector<LemmaCheck> out;
  double previous = 0.0;
  for (const EnsembleSpec& spec : specs) {
    const double lambda = solve_lambda(spec).lambda;
    const double k = static_cast<double>(spec.k());
    const double n = static_cast<double>(spec.n());
    const double delta = std::sqrt(k) * (1.0 - lambda);

    LemmaCheck lower;
    lower.lemma = LemmaId::kL5;
    lower.inputs = spec_inputs(spec);
    lower.inputs.emplace_back("lambda", lambda);
    lower.observed = delta;
    lower.target = previous;
    lower.sense = LemmaCheck::Sense::kAbove;
    out.push_back(finish(std::move(lower)));

    LemmaCheck upper;
    upper.lemma = LemmaId::kL5;
    upper.inputs = spec_inputs(spec);
    upper.inputs.emplace_back("lambda", lambda);
    upper.observed = k * (1.0 - lambda) * (1.0 - lambda);
    upper.target = 2.0 * std::log(n * std::sqrt(k) / (2.0 * std::numbers::pi));
    upper.sense = LemmaCheck::Sense::kBelow;
    out.push_back(finish(std::move(upper)));

    previous = delta;
  }
  return out;
}

LemmaCheck check_lemma6(const EnsembleSpec& spec, double x, bool uniform, double tolerance) {
  const double lambda = solve_lambda(spec).lambda;
  const double lambda_x = lambda_shift(spec, lambda, x);
  LemmaCheck check;
  check.lemma = LemmaId::kL6;
  check.inputs = spec_inputs(spec);
  check.inputs.emplace_back("x", x);
  check.inputs.emplace_back("uniform", uniform ? 1.0 : 0.0);
  check.tolerance = tolerance;
  if (!uniform) {
    check.observed = std::fabs((1.0 - lambda_x) / (1.0 - lambda) - 1.0);
  } else {
    const std::int64_t jmax = std::clamp<std::int64_t>(j_n(spec, lambda), 1, spec.n() - 1);
    check.inputs.emplace_back("j_n", static_cast<double>(jmax));
    // The ratio is affine in j, so the maximum sits at an endpoint.
    for (const std::int64_t j : {std::int64_t{1}, jmax}) {
      const double ratio = (1.0 - lambda_nj(spec, lambda_x, j)) / (1.0 - lambda);
      check.observed = std::max(check.observed, std::fabs(ratio - 1.0));
    }
  }
  return finish(std::move(check));
}

LemmaCheck check_lemma7(const EnsembleSpec& spec, double x, double tolerance) {
  const double lambda = solve_lambda(spec).lambda;
  const double lambda_x = lambda_shift(spec, lambda, x);
  const double k = static_cast<double>(spec.k());
  const double n = static_cast<double>(spec.n());
  LemmaCheck check;
  check.lemma = LemmaId::kL7;
  check.inputs = spec_inputs(spec);
  check.inputs.emplace_back("x", x);
  check.observed = std::exp(log_phi(k, lambda_x) - 2.0 * std::log1p(-lambda) + std::log(n) -
                            std::log(k) - x);
  check.target = 1.0;
  check.tolerance = tolerance;
  return finish(std::move(check));
}

LemmaCheck check_lemma8(const EnsembleSpec& spec, double x, std::optional<std::int64_t> j_count,
                        double tolerance) {
  const double lambda = solve_lambda(spec).lambda;
  const double lambda_x = lambda_shift(spec, lambda, x);
  const std::int64_t window = j_count.value_or(default_window(spec, lambda));
  if (window < 1 || window > spec.n() - 1) {
    throw std::invalid_argument("check_lemma8: j_count must lie in [1, n-1]");
  }
  const double k = static_cast<double>(spec.k());
  double sum = 0.0;
  for (std::int64_t j = 1; j <= window; ++j) {
    const double term = reg_inc_gamma_P(k, k * lambda_nj(spec, lambda_x, j));
    sum += term;
    if (term == 0.0 || term < sum * kTailCutoff) break;
  }
  LemmaCheck check;
  check.lemma = LemmaId::kL8;
  check.inputs = spec_inputs(spec);
  check.inputs.emplace_back("x", x);
  check.inputs.emplace_back("j_count", static_cast<double>(window));
  check.observed = sum;
  check.target = std::exp(x);
  check.tolerance = tolerance * check.target;
  return finish(std::move(check));
}

LemmaCheck check_lemma10(const EnsembleSpec& spec, double x, std::size_t samples,
                         std::uint64_t seed, double threshold) {
  if (samples == 0) throw std::invalid_argument("check_lemma10: samples must be positive");
  const double lambda = solve_lambda(spec).lambda;
  const double cut = static_cast<double>(spec.k()) / static_cast<double>(spec.n()) *
                     lambda_shift(spec, lambda, -x);
  const GammaSampler depth(static_cast<double>(spec.k()));
  const GammaSampler rest(static_cast<double>(spec.p()));
  std::vector<unsigned char> hit(samples, 0);
  parallel_for(samples, [&](std::size_t i) {
    RandomStream stream = make_stream(seed, i, StreamTag::kLemma10);
    const GammaPath path = draw_gamma_path(stream, depth, rest);
    hit[i] = path.S / path.T < cut ? 1 : 0;
  });
  const auto hits = std::count(hit.begin(), hit.end(), 1);
  LemmaCheck check;
  check.lemma = LemmaId::kL10;
  check.inputs = spec_inputs(spec);
  check.inputs.emplace_back("x", x);
  check.inputs.emplace_back("samples", static_cast<double>(samples));
  check.inputs.emplace_back("seed", static_cast<double>(seed));
  check.observed = static_cast<double>(hits) / static_cast<double>(samples);
  check.target = threshold;
  check.sense = LemmaCheck::Sense::kAtMost;
  return finish(std::move(check));
}

LemmaCheck check_lemma11(std::int64_t n, std::int64_t m, std::size_t trials, std::uint64_t seed,
                         double threshold) {
  if (n < 2 || n > kLemma11MaxN) {
    throw std::invalid_argument("check_lemma11: n must lie in [2, 1e6]");
  }
  if (m < 1 || m > n) throw std::invalid_argument("check_lemma11: m must lie in [1, n]");
  if (trials == 0) throw std::invalid_argument("check_lemma11: trials must be positive");
  std::vector<double> worst(trials, 0.0);
  parallel_for(trials, [&](std::size_t t) {
    RandomStream stream = make_stream(seed, t, StreamTag::kLemma11);
    double total = 0.0;
    double dev = 0.0;
    for (std::int64_t j = 1; j <= n; ++j) {
      total += stream.exponential();
      if (j >= m) dev = std::max(dev, std::fabs(total / static_cast<double>(j) - 1.0));
    }
    worst[t] = dev;
  });
  const double scale = std::sqrt(static_cast<double>(m) / std::log(static_cast<double>(n)));
  LemmaCheck check;
  check.lemma = LemmaId::kL11;
  check.inputs = {{"n", static_cast<double>(n)},
                  {"m", static_cast<double>(m)},
                  {"trials", static_cast<double>(trials)},
                  {"seed", static_cast<double>(seed)}};
  check.observed = *std::max_element(worst.begin(), worst.end()) * scale;
  check.target = threshold;
  check.sense = LemmaCheck::Sense::kAtMost;
  return finish(std::move(check));
}

GofReport check_lemma12(const EnsembleSpec& spec, std::size_t samples, std::uint64_t seed,
                        std::optional<std::int64_t> window, std::vector<double> grid,
                        std::size_t workers) {
  const double lambda = solve_lambda(spec).lambda;
  const double n = static_cast<double>(spec.n());
  const double k = static_cast<double>(spec.k());
  const std::int64_t width = window.value_or(default_window(spec, lambda));
  if (width < 1 || width > spec.n() - 1) {
    throw std::invalid_argument("check_lemma12: window must lie in [1, n-1]");
  }
  const double centre = k * lambda / n;
  const double alpha = lambda / (n * (1.0 - lambda));
  const LimitLaw law = LimitLaw::gumbel_min();

  GofReport report{.grid = std::move(grid), .law = law, .spec = spec, .normalization = {}};
  for (const double x : report.grid) {
    const double lx = lambda_shift(spec, lambda, x);
    const double f = -std::expm1(log_no_exceedance(spec, lx, width));
    report.sup_grid_distance = std::max(report.sup_grid_distance, std::fabs(f - law_cdf(law, x)));
  }

  report.sample_count = samples;
  if (samples > 0) {
    const GammaSampler depth(k);
    std::vector<double> values(samples);
    parallel_for(
        samples,
        [&](std::size_t i) {
          RandomStream stream = make_stream(seed, i, StreamTag::kLemma12);
          double best = std::numeric_limits<double>::infinity();
          for (std::int64_t j = 1; j <= width; ++j) {
            best = std::min(best, depth(stream) / (n + 1.0 - static_cast<double>(j)));
          }
          values[i] = (best - centre) / alpha;
        },
        workers);
    std::sort(values.begin(), values.end());
    report.ks_statistic = ks_statistic(values, [&](double v) { return law_cdf(law, v); });
  }
  return report;
}

LemmaCheck check_lemma13(const EnsembleSpec& spec, std::span<const double> grid, double tolerance) {
  const double lambda = solve_lambda(spec).lambda;
  const double n = static_cast<double>(spec.n());
  const double k = static_cast<double>(spec.k());
  const std::int64_t width = std::min(default_window(spec, lambda), spec.p());
  const LimitLaw law = LimitLaw::gumbel_min();
  double d = 0.0;
  for (const double x : grid) {
    const double t = 1.0 - k * lambda_shift(spec, lambda, x) / n;
    const std::vector<double> factors = radius_cdf_log_factors(spec, std::sqrt(t));
    double acc = 0.0;
    for (std::int64_t i = spec.p() + 1 - width; i <= spec.p(); ++i) acc += factors[i - 1];
    d = std::max(d, std::fabs(-std::expm1(acc) - law_cdf(law, x)));
  }
  LemmaCheck check;
  check.lemma = LemmaId::kL13;
  check.inputs = spec_inputs(spec);
  check.inputs.emplace_back("window", static_cast<double>(width));
  check.observed = d;
  check.target = 0.0;
  check.tolerance = tolerance;
  return finish(std::move(check));
}

// ---------------------------------------------------------------------------

double ks_against_radius_cdf(const EnsembleSpec& spec, std::vector<double> radii) {
  std::sort(radii.begin(), radii.end());
  return ks_statistic(radii, [&](double r) { return radius_cdf(spec, r); });
}

GofReport goodness_of_fit(const EnsembleSpec& spec, const Normalization& norm,
                          SampleMethod method, std::size_t count, std::uint64_t seed,
                          std::span<const double> grid, std::size_t workers) {
  GofReport report{.grid = {grid.begin(), grid.end()}, .law = norm.law, .spec = spec,
                   .normalization = norm};
  report.sup_grid_distance = sup_grid_distance(spec, norm, norm.law, grid);
  if (count == 0) return report;
  SampleBatch batch = sample_radius(spec, method, count, seed, workers);
  report.sample_count = batch.values.size();
  report.excluded = batch.excluded;
  if (batch.values.empty()) throw ConvergenceError("goodness_of_fit: every draw was excluded");
  for (double& v : batch.values) v = (v - norm.A) / norm.B;
  std::sort(batch.values.begin(), batch.values.end());
  report.ks_statistic = ks_statistic(batch.values, [&](double v) { return law_cdf(norm.law, v); });
  return report;
}

std::vector<GofReport> convergence_table(std::span<const EnsembleSpec> specs,
                                         const NormalizationRule& rule, const LimitLaw& law,
                                         std::span<const double> grid, std::size_t samples,
                                         std::uint64_t seed, std::size_t workers) {
  std::vector<GofReport> out;
  out.reserve(specs.size());
  for (const EnsembleSpec& spec : specs) {
    Normalization norm = rule(spec);
    norm.law = law;
    out.push_back(goodness_of_fit(spec, norm, SampleMethod::kBetaMax, samples, seed, grid, workers));
  }
  return out;
}

}  // namespace cuetrunc
