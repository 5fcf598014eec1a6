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

#ifndef CUETRUNC_LIMIT_LAWS_HPP_
#define CUETRUNC_LIMIT_LAWS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace cuetrunc {

/// One of the three limit laws of the normalized spectral radius:
///   Gumbel           exp(-e^{-x})
///   ReversedWeibull  exp(-(-x)^k) for x <= 0, 1 for x > 0
///   GumbelMin        1 - exp(-e^{x})   (the law of the negated Gumbel)
struct LimitLaw {
  enum class Kind { kGumbel, kReversedWeibull, kGumbelMin };

  Kind kind = Kind::kGumbel;
  int k = 0;  // shape, meaningful only for kReversedWeibull

  static LimitLaw gumbel() { return {Kind::kGumbel, 0}; }
  static LimitLaw reversed_weibull(int k);
  static LimitLaw gumbel_min() { return {Kind::kGumbelMin, 0}; }

  std::string name() const;
  friend bool operator==(const LimitLaw&, const LimitLaw&) = default;
};

double law_cdf(const LimitLaw& law, double x);
double law_density(const LimitLaw& law, double x);
double law_quantile(const LimitLaw& law, double q);

/// Inverse-cdf draws; draw i depends only on (seed, i).
std::vector<double> law_sample(const LimitLaw& law, std::size_t count, std::uint64_t seed);

}  // namespace cuetrunc

#endif  // CUETRUNC_LIMIT_LAWS_HPP_
