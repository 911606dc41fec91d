// Copyright 2026 The hiddencorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>

#include "benchmark/benchmark.h"
#include "hiddencorr/classical.hpp"
#include "hiddencorr/quantum.hpp"
#include "hiddencorr/thermo.hpp"
#include "support/random_states.hpp"

using namespace hiddencorr;

namespace {

FactorShape square_shape(std::size_t side) { return FactorShape{side, side}; }

void BM_VonNeumannEntropy(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const DensityMatrix rho = sampling::random_density(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(von_neumann_entropy(rho));
}
BENCHMARK(BM_VonNeumannEntropy)->RangeMultiplier(2)->Range(4, 64);

void BM_ArtificialReduce(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const std::size_t side = state.range(0);
  const DensityMatrix rho = sampling::random_density(rng, side * side);
  const MarginalSpec spec(square_shape(side), {1});
  for (auto _ : state) benchmark::DoNotOptimize(artificial_reduce(rho, spec));
}
BENCHMARK(BM_ArtificialReduce)->DenseRange(2, 8, 2);

void BM_Ppt(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const std::size_t side = state.range(0);
  const DensityMatrix rho = sampling::random_density(rng, side * side);
  const FactorShape shape = square_shape(side);
  for (auto _ : state) benchmark::DoNotOptimize(is_ppt(rho, shape));
}
BENCHMARK(BM_Ppt)->DenseRange(2, 8, 2);

void BM_GibbsState(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const HermitianObservable h = sampling::random_hermitian(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gibbs_state(h, 1.5));
}
BENCHMARK(BM_GibbsState)->RangeMultiplier(2)->Range(4, 64);

void BM_ConditionalQuantum(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const std::size_t side = state.range(0);
  const FactorShape shape{side, side, side};
  const DensityMatrix rho = sampling::random_density(rng, shape.dimension());
  for (auto _ : state) benchmark::DoNotOptimize(conditional_quantum_information(rho, shape));
}
BENCHMARK(BM_ConditionalQuantum)->DenseRange(2, 4);

void BM_ConditionalClassical(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const std::size_t side = state.range(0);
  const FactorShape shape{side, side, side};
  const ProbVector p = sampling::random_simplex(rng, shape.dimension());
  for (auto _ : state) benchmark::DoNotOptimize(conditional_information(p, shape));
}
BENCHMARK(BM_ConditionalClassical)->RangeMultiplier(2)->Range(2, 32);

}  // namespace

BENCHMARK_MAIN();
