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

#ifndef CUETRUNC_SAMPLER_HPP_
#define CUETRUNC_SAMPLER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "cuetrunc/normalization.hpp"
#include "cuetrunc/rng.hpp"

namespace cuetrunc {

enum class SampleMethod { kBetaMax, kGammaRatio, kMatrixOracle };

std::string to_string(SampleMethod method);
/// CLI spellings: beta, gamma-ratio, matrix.
std::optional<SampleMethod> parse_method(std::string_view text);

/// Spectral-radius draws with their provenance. Draw i depends only on
/// (spec, seed, method, i).
struct SampleBatch {
  std::vector<double> values;
  EnsembleSpec spec;
  std::uint64_t seed = 0;
  SampleMethod method = SampleMethod::kBetaMax;
  std::size_t excluded = 0;  // matrix-oracle draws dropped for nonconvergence
};

/// sqrt(max_i Y_i) with independent Y_i ~ Beta(i, k), i = 1..p.
SampleBatch sample_beta_max(const EnsembleSpec& spec, std::size_t count, std::uint64_t seed,
                            std::size_t workers = 0);

/// One column of the exponential array: S ~ Gamma(k) and
/// T = S + Gamma(p + 1 - j), so that 1 - S/T ~ Beta(p + 1 - j, k).
struct GammaPath {
  double S = 0.0;
  double T = 0.0;
};

GammaPath draw_gamma_path(RandomStream& stream, const GammaSampler& depth,
                          const GammaSampler& rest);

/// sqrt(max_j (1 - S_j / T_{n+1-j})) over j = 1..p.
SampleBatch sample_gamma_ratio(const EnsembleSpec& spec, std::size_t count, std::uint64_t seed,
                               std::size_t workers = 0);

/// Dispatches on method; kMatrixOracle goes through oracle_radius.
SampleBatch sample_radius(const EnsembleSpec& spec, SampleMethod method, std::size_t count,
                          std::uint64_t seed, std::size_t workers = 0);

/// |min_i x_i (1 + e_i) - min_i x_i| next to its bound max|e_i| min_i x_i.
struct MinPerturbation {
  double gap = 0.0;
  double bound = 0.0;
};

/// Requires x_i > 0 and max |e_i| < 1; then gap <= bound always holds.
MinPerturbation min_perturbation(std::span<const double> x, std::span<const double> eps);

}  // namespace cuetrunc

#endif  // CUETRUNC_SAMPLER_HPP_
