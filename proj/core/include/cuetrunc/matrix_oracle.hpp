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

#ifndef CUETRUNC_MATRIX_ORACLE_HPP_
#define CUETRUNC_MATRIX_ORACLE_HPP_

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "cuetrunc/rng.hpp"
#include "cuetrunc/sampler.hpp"

namespace cuetrunc {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr int kOracleMaxDimension = 256;
inline constexpr std::size_t kOracleMaxCount = 10000;

/// Haar unitary from the QR factorization of a complex Ginibre matrix with
/// the phases of diag(R) pushed into Q. Throws std::length_error for n > 256.
ComplexMatrix sample_haar_unitary(int n, RandomStream& stream);
ComplexMatrix sample_haar_unitary(int n, std::uint64_t seed);

struct DominantEigenvalue {
  std::complex<double> value;
  double modulus = 0.0;
  bool converged = false;
  int attempts = 0;
};

struct PowerIterationOptions {
  double tolerance = 1e-9;  // on successive Rayleigh-quotient moduli
  int restarts = 5;
  int max_steps = 400;      // per attempt, each step applying A^(2^s)
};

/// Dominant eigenvalue of a square matrix by power iteration on A^(2^s)
/// (s grows with each restart) from a random complex start vector. The
/// Rayleigh quotient is always taken against A itself.
DominantEigenvalue dominant_eigenvalue(const ComplexMatrix& a, RandomStream& stream,
                                       const PowerIterationOptions& options = {});

/// Spectral radii of leading p x p blocks of Haar unitaries. Draws whose
/// power iteration fails are excluded and counted in SampleBatch::excluded.
SampleBatch oracle_radius(const EnsembleSpec& spec, std::size_t count, std::uint64_t seed,
                          std::size_t workers = 0);

}  // namespace cuetrunc

#endif  // CUETRUNC_MATRIX_ORACLE_HPP_
