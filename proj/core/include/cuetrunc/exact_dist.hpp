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

#ifndef CUETRUNC_EXACT_DIST_HPP_
#define CUETRUNC_EXACT_DIST_HPP_

#include <optional>
#include <vector>

#include "cuetrunc/normalization.hpp"

namespace cuetrunc {

/// log I_{r^2}(i, k) for i = 1..p. The product of these factors is the cdf
/// of the spectral radius at r.
///
/// Upper tails grow with i through Q_{i+1} = Q_i + T_i with
/// T_i = t^i (1-t)^k / (i B(i,k)); lower tails shrink with i through
/// I_i = I_{i+1} + T_i. Each side is summed in the direction where all terms
/// are positive, switching where Q_i crosses 1/2, so every factor is formed
/// from its smaller tail.
std::vector<double> radius_cdf_log_factors(const EnsembleSpec& spec, double r);

double log_radius_cdf(const EnsembleSpec& spec, double r);

/// P(max |z_j| <= r) for r in [0, 1].
double radius_cdf(const EnsembleSpec& spec, double r);

/// Same quantity, one reg_inc_beta evaluation per factor. O(p) continued
/// fractions per call; used to cross-check the recurrence.
double radius_cdf_reference(const EnsembleSpec& spec, double r);

/// Smallest r with |radius_cdf(r) - q| <= 1e-10, by bisection. With a
/// normalization the search starts from [A - 10B, A + 10B].
double radius_quantile(const EnsembleSpec& spec, double q,
                       const std::optional<Normalization>& bracket = std::nullopt);

struct StandardizedCdf {
  double value = 0.0;
  bool clamped = false;  // A + Bx fell outside [0, 1]
};

/// G_n(x) = radius_cdf(A + B x), clamped to {0, 1} outside the support.
StandardizedCdf standardized_cdf(const EnsembleSpec& spec, const Normalization& norm, double x);

}  // namespace cuetrunc

#endif  // CUETRUNC_EXACT_DIST_HPP_
