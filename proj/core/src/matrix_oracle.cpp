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

#include "cuetrunc/matrix_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cuetrunc/parallel.hpp"

namespace cuetrunc {

namespace {

constexpr int kBaseSquarings = 6;

Eigen::VectorXcd random_unit_vector(Eigen::Index size, RandomStream& stream) {
  Eigen::VectorXcd v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = {stream.normal(), stream.normal()};
  v.normalize();
  return v;
}

}  // namespace

ComplexMatrix sample_haar_unitary(int n, RandomStream& stream) {
  if (n < 1 || n > kOracleMaxDimension) {
    throw std::length_error("sample_haar_unitary: n must lie in [1, 256], got " +
                            std::to_string(n));
  }
  ComplexMatrix ginibre(n, n);
  const double scale = std::sqrt(0.5);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) ginibre(i, j) = {scale * stream.normal(), scale * stream.normal()};
  }
  const Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
  ComplexMatrix q = qr.householderQ();
  const auto& packed = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = packed(j, j);
    const double modulus = std::abs(d);
    if (modulus > 0.0) q.col(j) *= d / modulus;
  }
  return q;
}

ComplexMatrix sample_haar_unitary(int n, std::uint64_t seed) {
  RandomStream stream = make_stream(seed, 0, StreamTag::kMatrixOracle);
  return sample_haar_unitary(n, stream);
}

DominantEigenvalue dominant_eigenvalue(const ComplexMatrix& a, RandomStream& stream,
                                       const PowerIterationOptions& options) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw std::invalid_argument("dominant_eigenvalue: matrix must be square and nonempty");
  }
  DominantEigenvalue result;
  for (int attempt = 0; attempt <= options.restarts; ++attempt) {
    result.attempts = attempt + 1;
    ComplexMatrix power = a;
    for (int s = 0; s < kBaseSquarings + 2 * attempt; ++s) {
      power = (power * power).eval();
      const double scale = power.cwiseAbs().maxCoeff();
      if (scale == 0.0) break;
      power /= scale;
    }
    if (power.cwiseAbs().maxCoeff() == 0.0) {
      // nilpotent to working precision
      return {{0.0, 0.0}, 0.0, true, result.attempts};
    }
    Eigen::VectorXcd v = random_unit_vector(a.rows(), stream);
    double previous = -1.0;
    for (int step = 0; step < options.max_steps; ++step) {
      Eigen::VectorXcd w = power * v;
      const double norm = w.norm();
      if (norm == 0.0) break;  // start vector in a null space; restart
      v = w / norm;
      const Eigen::VectorXcd av = a * v;
      const std::complex<double> rayleigh = v.dot(av);
      const double modulus = std::abs(rayleigh);
      const double residual = (av - rayleigh * v).norm();
      if (std::fabs(modulus - previous) <= options.tolerance &&
          residual <= std::sqrt(options.tolerance)) {
        return {rayleigh, modulus, true, result.attempts};
      }
      previous = modulus;
    }
  }
  result.converged = false;
  return result;
}

SampleBatch oracle_radius(const EnsembleSpec& spec, std::size_t count, std::uint64_t seed,
                          std::size_t workers) {
  if (spec.n() > kOracleMaxDimension) {
    throw std::length_error("oracle_radius: n must be <= 256");
  }
  if (count < 1 || count > kOracleMaxCount) {
    throw std::length_error("oracle_radius: count must lie in [1, 10000]");
  }
  const int n = static_cast<int>(spec.n());
  const int p = static_cast<int>(spec.p());
  std::vector<DominantEigenvalue> draws(count);
  parallel_for(
      count,
      [&](std::size_t index) {
        RandomStream stream = make_stream(seed, index, StreamTag::kMatrixOracle);
        const ComplexMatrix u = sample_haar_unitary(n, stream);
        const ComplexMatrix block = u.topLeftCorner(p, p);
        draws[index] = dominant_eigenvalue(block, stream);
      },
      workers);
  SampleBatch batch{{}, spec, seed, SampleMethod::kMatrixOracle, 0};
  batch.values.reserve(count);
  for (const DominantEigenvalue& d : draws) {
    if (d.converged) {
      batch.values.push_back(d.modulus);
    } else {
      ++batch.excluded;
    }
  }
  return batch;
}

}  // namespace cuetrunc
