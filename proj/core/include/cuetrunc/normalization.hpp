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

#ifndef CUETRUNC_NORMALIZATION_HPP_
#define CUETRUNC_NORMALIZATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cuetrunc/limit_laws.hpp"

namespace cuetrunc {

/// Leading p x p truncation of an n x n Haar unitary; k = n - p is the
/// truncation depth.
class EnsembleSpec {
 public:
  /// Throws std::domain_error unless n >= 2 and 1 <= p < n.
  EnsembleSpec(std::int64_t n, std::int64_t p);

  static EnsembleSpec from_depth(std::int64_t n, std::int64_t k) { return {n, n - k}; }

  std::int64_t n() const { return n_; }
  std::int64_t p() const { return p_; }
  std::int64_t k() const { return n_ - p_; }

  friend bool operator==(const EnsembleSpec&, const EnsembleSpec&) = default;

 private:
  std::int64_t n_;
  std::int64_t p_;
};

enum class RegimeLabel {
  kThm1Combined,      // p -> inf and k / (log n)^3 -> inf
  kThm2SubLog,        // k -> inf and k / log n -> 0
  kThm3FixedK,        // k fixed
  kThm4Intermediate,  // k -> inf and k (log n)^3 / n -> 0
  kAmbiguous,
};

std::string to_string(RegimeLabel regime);
/// Accepts the CLI spellings thm1, thm2, thm3, thm4.
std::optional<RegimeLabel> parse_regime(std::string_view text);

/// Which constant multiplies k^{3/2} in the equation defining lambda_n.
///   kCorrected: g_n(lambda) = (1/k) log(n / (sqrt(2 pi) k^{3/2}))
///   kPrinted:   g_n(lambda) = (1/k) log(n / (2 pi k^{3/2}))
/// Only kCorrected makes phi(k, lambda_n(x)) n / (k e^x (1 - lambda_n)^2)
/// tend to 1; kPrinted leaves a factor sqrt(2 pi) and shifts the limit
/// law by log sqrt(2 pi).
enum class LambdaConvention { kCorrected, kPrinted };

struct LambdaSolution {
  double lambda = 0.0;
  double residual = 0.0;  // |g_n(lambda) - rhs|
  int iterations = 0;
};

/// Root a_n of P(k, a_n) = k / n.
struct GammaRootSolution {
  double a_n = 0.0;
  double residual = 0.0;  // |P(k, a_n) - k/n|
  int iterations = 0;
};

/// Location/scale of the spectral radius: (max |z| - A) / B -> law.
struct Normalization {
  double A = 1.0;
  double B = 1.0;
  LimitLaw law = LimitLaw::gumbel();
  RegimeLabel regime = RegimeLabel::kAmbiguous;
  std::optional<LambdaSolution> lambda;
  std::optional<GammaRootSolution> gamma_root;
};

/// g_n(lambda) = tau(lambda) + (2/k) log(1 - lambda); strictly decreasing.
double g_n(const EnsembleSpec& spec, double lambda);
/// d g_n / d lambda = 1 - 1/lambda - 2 / (k (1 - lambda)).
double g_n_derivative(const EnsembleSpec& spec, double lambda);
double lambda_rhs(const EnsembleSpec& spec,
                  LambdaConvention convention = LambdaConvention::kCorrected);

/// Root of g_n(lambda) = lambda_rhs on (0, 1) by bisection with Newton
/// acceleration; residual <= 1e-12. Throws ConvergenceError after 200 steps.
LambdaSolution solve_lambda(const EnsembleSpec& spec,
                            LambdaConvention convention = LambdaConvention::kCorrected);

/// Theorem 1 helpers, defined for y > 3.
double thm1_a(double y);
double thm1_b(double y);

Normalization constants_thm1(const EnsembleSpec& spec);
Normalization constants_thm2(const EnsembleSpec& spec);
Normalization constants_thm3(const EnsembleSpec& spec);
Normalization constants_thm4(const EnsembleSpec& spec,
                             LambdaConvention convention = LambdaConvention::kCorrected);

/// Finite-sample regime thresholds with L = log n:
///   k <= 8 and k <= L/2             -> Ambiguous (fixed-k and sub-log overlap)
///   k <= 8                          -> Thm3FixedK
///   k <= L/2                        -> Thm2SubLog
///   k >= 2L and k L^3 <= n          -> Thm4Intermediate
///   p >= 16 and (k >= 10 L^3 or k >= n/10) -> Thm1Combined
///   otherwise                       -> Ambiguous
RegimeLabel classify_regime(const EnsembleSpec& spec);

/// Regimes near whose boundary the spec sits and whose constants evaluate;
/// offered when classify_regime returns kAmbiguous.
std::vector<RegimeLabel> candidate_regimes(const EnsembleSpec& spec);

/// Constants for a specific regime; throws std::invalid_argument on kAmbiguous.
Normalization normalize(const EnsembleSpec& spec, RegimeLabel regime);

/// lambda (1 + x / (k (1 - lambda))); throws std::range_error unless the
/// result lies in (0, 1).
double lambda_shift(const EnsembleSpec& spec, double lambda, double x);

/// ((n + 1 - j) / n) lambda_x for 1 <= j <= n - 1.
double lambda_nj(const EnsembleSpec& spec, double lambda_x, std::int64_t j);

}  // namespace cuetrunc

#endif  // CUETRUNC_NORMALIZATION_HPP_
