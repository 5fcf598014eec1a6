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

#include "cuetrunc/limit_laws.hpp"

#include <cmath>
#include <stdexcept>

#include "cuetrunc/rng.hpp"

namespace cuetrunc {

LimitLaw LimitLaw::reversed_weibull(int k) {
  if (k < 1) throw std::domain_error("reversed Weibull shape must be >= 1");
  return {Kind::kReversedWeibull, k};
}

std::string LimitLaw::name() const {
  switch (kind) {
    case Kind::kGumbel:
      return "gumbel";
    case Kind::kReversedWeibull:
      return "reversed_weibull_" + std::to_string(k);
    case Kind::kGumbelMin:
      return "gumbel_min";
  }
  return "unknown";
}

double law_cdf(const LimitLaw& law, double x) {
  switch (law.kind) {
    case LimitLaw::Kind::kGumbel:
      return std::exp(-std::exp(-x));
    case LimitLaw::Kind::kReversedWeibull:
      if (x >= 0.0) return 1.0;
      return std::exp(-std::pow(-x, law.k));
    case LimitLaw::Kind::kGumbelMin:
      return -std::expm1(-std::exp(x));
  }
  return 0.0;
}

double law_density(const LimitLaw& law, double x) {
  switch (law.kind) {
    case LimitLaw::Kind::kGumbel:
      return std::exp(-x - std::exp(-x));
    case LimitLaw::Kind::kReversedWeibull: {
      if (x >= 0.0) return 0.0;
      const double y = -x;
      return law.k * std::pow(y, law.k - 1) * std::exp(-std::pow(y, law.k));
    }
    case LimitLaw::Kind::kGumbelMin:
      return std::exp(x - std::exp(x));
  }
  return 0.0;
}

double law_quantile(const LimitLaw& law, double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("law_quantile: q must lie in (0, 1)");
  switch (law.kind) {
    case LimitLaw::Kind::kGumbel:
      return -std::log(-std::log(q));
    case LimitLaw::Kind::kReversedWeibull:
      return -std::pow(-std::log(q), 1.0 / law.k);
    case LimitLaw::Kind::kGumbelMin:
      return std::log(-std::log1p(-q));
  }
  return 0.0;
}

std::vector<double> law_sample(const LimitLaw& law, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw std::domain_error("law_sample: count must be >= 1");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    RandomStream stream = make_stream(seed, i, StreamTag::kLimitLaw);
    out[i] = law_quantile(law, stream.uniform());
  }
  return out;
}

}  // namespace cuetrunc
