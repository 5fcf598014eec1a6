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

#ifndef CUETRUNC_RNG_HPP_
#define CUETRUNC_RNG_HPP_

#include <cstdint>
#include <random>

namespace cuetrunc {

using Engine = std::mt19937_64;

/// Distinguishes the random streams of different samplers so that equal
/// (seed, index) pairs never share a stream across methods.
enum class StreamTag : std::uint64_t {
  kBetaMax = 1,
  kGammaRatio = 2,
  kMatrixOracle = 3,
  kLimitLaw = 4,
  kLemma10 = 5,
  kLemma11 = 6,
  kLemma12 = 7,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Random source owned by a single sample index.
struct RandomStream {
  Engine engine;
  std::normal_distribution<double> normal_dist;

  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform() { return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53; }
  double normal() { return normal_dist(engine); }
  double exponential();
};

/// Stream for one sample index. The engine is seeded from a 128-bit hash of
/// (seed, index, tag), so a draw depends only on its own index and never on
/// how indices are partitioned among workers.
RandomStream make_stream(std::uint64_t seed, std::uint64_t index, StreamTag tag);

/// Gamma(shape, 1) variate: Marsaglia-Tsang squeeze/accept for shape >= 1,
/// boosted through Gamma(shape + 1) U^{1/shape} below that.
class GammaSampler {
 public:
  explicit GammaSampler(double shape);
  double operator()(RandomStream& stream) const;
  double shape() const { return shape_; }

 private:
  double shape_;
  double d_;
  double c_;
  bool boost_;
};

}  // namespace cuetrunc

#endif  // CUETRUNC_RNG_HPP_
