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

#ifndef CUETRUNC_SPECIAL_FN_HPP_
#define CUETRUNC_SPECIAL_FN_HPP_

#include <stdexcept>

namespace cuetrunc {

/// Thrown when an iterative evaluation fails to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An approximation together with a bound on its relative error.
///
/// `value` may underflow to zero for extreme arguments; `log_value` always
/// carries the result in log domain.
struct ApproxValue {
  double value = 0.0;
  double log_value = 0.0;
  double rel_error_bound = 0.0;
};

/// Lower and upper tails of a regularized distribution function at one
/// point. Whichever tail is smaller is computed directly, the other one as
/// its complement, so both carry full relative accuracy when small.
struct Tails {
  double lower = 0.0;
  double upper = 0.0;
};

/// Large-deviation rate tau(l) = l - 1 - log(l), for l > 0.
double tau(double lambda);

/// eta(l) = -sqrt(2 tau(l)) on (0, 1).
double eta(double lambda);

/// log of phi(a, l) = exp(-a tau(l)) / sqrt(2 pi a).
double log_phi(double a, double lambda);
double phi(double a, double lambda);

/// log Gamma(a) for a > 0.
double ln_gamma(double a);

/// Stirling remainder: ln_gamma(a) - [(a - 1/2) log a - a + log(2 pi)/2].
double stirling_correction(double a);

/// log of the Beta function B(a, b).
double ln_beta(double a, double b);

/// Regularized lower incomplete gamma P(a, z) and its complement Q(a, z).
Tails reg_inc_gamma(double a, double z);
double reg_inc_gamma_P(double a, double z);
double reg_inc_gamma_Q(double a, double z);

/// log P(a, z), valid where P underflows (z far below a).
double log_reg_inc_gamma_P(double a, double z);

/// Leading-order uniform approximation of P(k, k lambda) for lambda in
/// (0, 1), namely phi(k, lambda) / (1 - lambda), with a heuristic relative
/// error bound built from the erfc remainder h(x) < 1/(2x^2) plus
/// kTemmeBoundConstant / k. The bound is not certified; it grows without
/// limit as sqrt(k) (1 - lambda) -> 0 and the caller decides what to do.
ApproxValue reg_inc_gamma_P_temme(double k, double lambda);

/// Constant c in the c/k term of the Temme error bound.
inline constexpr double kTemmeBoundConstant = 2.0;

/// Regularized incomplete beta I_x(a, b) and its complement.
Tails reg_inc_beta(double x, double a, double b);
double reg_inc_beta_I(double x, double a, double b);

/// Complementary error function.
double erfc(double x);

/// The remainder h(x) defined for x > 0 by
///   erfc(x) / 2 = (1 - h(x)) exp(-x^2) / (2 sqrt(pi) x),
/// which satisfies 0 < h(x) < 1 / (2 x^2).
double erfc_remainder(double x);

}  // namespace cuetrunc

#endif  // CUETRUNC_SPECIAL_FN_HPP_
