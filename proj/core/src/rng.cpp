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

#include "cuetrunc/rng.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace cuetrunc {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream make_stream(std::uint64_t seed, std::uint64_t index, StreamTag tag) {
  const auto t = static_cast<std::uint64_t>(tag);
  const std::uint64_t lo = mix64(seed ^ mix64(index ^ mix64(t)));
  const std::uint64_t hi = mix64(lo ^ mix64(seed + 0x632be59bd9b4e019ULL) ^
                                 mix64(index * 0xd6e8feb86659fd93ULL + t));
  std::seed_seq seq{static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(lo >> 32),
                    static_cast<std::uint32_t>(hi), static_cast<std::uint32_t>(hi >> 32)};
  return RandomStream{Engine(seq), {}};
}

double RandomStream::exponential() { return -std::log(uniform()); }

GammaSampler::GammaSampler(double shape) : shape_(shape), boost_(shape < 1.0) {
  if (!(shape > 0.0)) throw std::domain_error("GammaSampler: shape must be positive");
  const double a = boost_ ? shape + 1.0 : shape;
  d_ = a - 1.0 / 3.0;
  c_ = 1.0 / std::sqrt(9.0 * d_);
}

double GammaSampler::operator()(RandomStream& stream) const {
  double draw;
  for (;;) {
    double x;
    double v;
    do {
      x = stream.normal();
      v = 1.0 + c_ * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) {
      draw = d_ * v;
      break;
    }
    if (std::log(u) < 0.5 * x2 + d_ * (1.0 - v + std::log(v))) {
      draw = d_ * v;
      break;
    }
  }
  if (boost_) draw *= std::pow(stream.uniform(), 1.0 / shape_);
  return draw;
}

}  // namespace cuetrunc
