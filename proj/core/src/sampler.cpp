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

#include "cuetrunc/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cuetrunc/matrix_oracle.hpp"
#include "cuetrunc/parallel.hpp"

namespace cuetrunc {

namespace {

constexpr double kBelowOne = 0x1.fffffffffffffp-1;

std::vector<GammaSampler> samplers_for_shapes(std::int64_t max_shape) {
  std::vector<GammaSampler> out;
  out.reserve(static_cast<std::size_t>(max_shape));
  for (std::int64_t s = 1; s <= max_shape; ++s) out.emplace_back(static_cast<double>(s));
  return out;
}

void require_count(std::size_t count) {
  if (count < 1) throw std::domain_error("sample count must be >= 1");
}

}  // namespace

std::string to_string(SampleMethod method) {
  switch (method) {
    case SampleMethod::kBetaMax:
      return "beta";
    case SampleMethod::kGammaRatio:
      return "gamma-ratio";
    case SampleMethod::kMatrixOracle:
      return "matrix";
  }
  return "beta";
}

std::optional<SampleMethod> parse_method(std::string_view text) {
  if (text == "beta") return SampleMethod::kBetaMax;
  if (text == "gamma-ratio") return SampleMethod::kGammaRatio;
  if (text == "matrix") return SampleMethod::kMatrixOracle;
  return std::nullopt;
}

SampleBatch sample_beta_max(const EnsembleSpec& spec, std::size_t count, std::uint64_t seed,
                            std::size_t workers) {
  require_count(count);
  const std::vector<GammaSampler> shapes = samplers_for_shapes(spec.p());
  const GammaSampler depth(static_cast<double>(spec.k()));
  SampleBatch batch{std::vector<double>(count), spec, seed, SampleMethod::kBetaMax, 0};
  parallel_for(
      count,
      [&](std::size_t index) {
        RandomStream stream = make_stream(seed, index, StreamTag::kBetaMax);
        double largest = 0.0;
        for (const GammaSampler& shape : shapes) {
          const double x = shape(stream);
          const double w = depth(stream);
          largest = std::max(largest, x / (x + w));
        }
        batch.values[index] = std::sqrt(std::min(largest, kBelowOne));
      },
      workers);
  return batch;
}

GammaPath draw_gamma_path(RandomStream& stream, const GammaSampler& depth,
                          const GammaSampler& rest) {
  const double s = depth(stream);
  return {s, s + rest(stream)};
}

SampleBatch sample_gamma_ratio(const EnsembleSpec& spec, std::size_t count, std::uint64_t seed,
                               std::size_t workers) {
  require_count(count);
  const std::vector<GammaSampler> rest = samplers_for_shapes(spec.p());
  const GammaSampler depth(static_cast<double>(spec.k()));
  const std::int64_t p = spec.p();
  SampleBatch batch{std::vector<double>(count), spec, seed, SampleMethod::kGammaRatio, 0};
  parallel_for(
      count,
      [&](std::size_t index) {
        RandomStream stream = make_stream(seed, index, StreamTag::kGammaRatio);
        double smallest_ratio = 1.0;
        for (std::int64_t j = 1; j <= p; ++j) {
          // T_{n+1-j} carries p + 1 - j exponentials beyond S_j.
          const GammaPath path = draw_gamma_path(stream, depth, rest[p - j]);
          smallest_ratio = std::min(smallest_ratio, path.S / path.T);
        }
        batch.values[index] = std::sqrt(std::min(1.0 - smallest_ratio, kBelowOne));
      },
      workers);
  return batch;
}

SampleBatch sample_radius(const EnsembleSpec& spec, SampleMethod method, std::size_t count,
                          std::uint64_t seed, std::size_t workers) {
  switch (method) {
    case SampleMethod::kBetaMax:
      return sample_beta_max(spec, count, seed, workers);
    case SampleMethod::kGammaRatio:
      return sample_gamma_ratio(spec, count, seed, workers);
    case SampleMethod::kMatrixOracle:
      return oracle_radius(spec, count, seed, workers);
  }
  throw std::invalid_argument("sample_radius: unknown method");
}

MinPerturbation min_perturbation(std::span<const double> x, std::span<const double> eps) {
  if (x.empty() || x.size() != eps.size()) {
    throw std::invalid_argument("min_perturbation: x and eps must be nonempty and equal length");
  }
  double min_x = x[0];
  double min_perturbed = x[0] * (1.0 + eps[0]);
  double max_eps = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) throw std::domain_error("min_perturbation: x must be positive");
    max_eps = std::max(max_eps, std::fabs(eps[i]));
    min_x = std::min(min_x, x[i]);
    min_perturbed = std::min(min_perturbed, x[i] * (1.0 + eps[i]));
  }
  if (!(max_eps < 1.0)) throw std::domain_error("min_perturbation: requires max |eps| < 1");
  return {std::fabs(min_perturbed - min_x), max_eps * min_x};
}

}  // namespace cuetrunc
