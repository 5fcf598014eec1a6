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

#include <cstdint>

#include <benchmark/benchmark.h>

#include "cuetrunc/exact_dist.hpp"
#include "cuetrunc/matrix_oracle.hpp"
#include "cuetrunc/normalization.hpp"
#include "cuetrunc/sampler.hpp"
#include "cuetrunc/special_fn.hpp"

namespace {

using cuetrunc::EnsembleSpec;

void BM_RegIncGammaP(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cuetrunc::reg_inc_gamma_P(a, 0.9 * a));
  }
}
BENCHMARK(BM_RegIncGammaP)->Arg(5)->Arg(133)->Arg(10000);

void BM_RegIncBeta(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cuetrunc::reg_inc_beta_I(0.99, a, 40.0));
  }
}
BENCHMARK(BM_RegIncBeta)->Arg(10)->Arg(4000);

void BM_SolveLambda(benchmark::State& state) {
  const EnsembleSpec spec = EnsembleSpec::from_depth(1000000, 191);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cuetrunc::solve_lambda(spec).lambda);
  }
}
BENCHMARK(BM_SolveLambda);

// Exact product cdf at the median, p factors per call.
void BM_RadiusCdf(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const EnsembleSpec spec = EnsembleSpec::from_depth(n, state.range(1));
  const double r = cuetrunc::radius_quantile(spec, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cuetrunc::radius_cdf(spec, r));
  }
  state.SetItemsProcessed(state.iterations() * spec.p());
}
BENCHMARK(BM_RadiusCdf)->Args({500, 40})->Args({32000, 108})->Args({1000000, 191})
    ->Unit(benchmark::kMicrosecond);

void BM_SampleBetaMax(benchmark::State& state) {
  const EnsembleSpec spec = EnsembleSpec::from_depth(state.range(0), 40);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cuetrunc::sample_beta_max(spec, 100, seed++, 1).values.data());
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_SampleBetaMax)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_SampleGammaRatio(benchmark::State& state) {
  const EnsembleSpec spec = EnsembleSpec::from_depth(state.range(0), 40);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cuetrunc::sample_gamma_ratio(spec, 100, seed++, 1).values.data());
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_SampleGammaRatio)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_HaarUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cuetrunc::sample_haar_unitary(n, seed++).data());
  }
}
BENCHMARK(BM_HaarUnitary)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_OracleRadius(benchmark::State& state) {
  const EnsembleSpec spec(32, 24);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cuetrunc::oracle_radius(spec, 10, seed++, 1).values.data());
  }
  state.SetItemsProcessed(state.iterations() * 10);
}
BENCHMARK(BM_OracleRadius)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
