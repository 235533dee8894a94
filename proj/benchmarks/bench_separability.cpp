// Copyright 2026 The Entangle Authors
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

#include <benchmark/benchmark.h>

#include "entangle/separability.hpp"

namespace {

using namespace entangle;

DensityMatrix sample(std::size_t d, std::uint64_t seed) { return random_density({d, d}, d, seed); }

void BM_Ppt(benchmark::State& state) {
  const auto rho = sample(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ppt_criterion(rho));
}
BENCHMARK(BM_Ppt)->DenseRange(2, 6, 1);

void BM_Reduction(benchmark::State& state) {
  const auto rho = sample(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(reduction_criterion(rho));
}
BENCHMARK(BM_Reduction)->DenseRange(2, 6, 1);

void BM_Majorization(benchmark::State& state) {
  const auto rho = sample(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(majorization_criterion(rho));
}
BENCHMARK(BM_Majorization)->DenseRange(2, 6, 1);

void BM_Schmidt(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto psi = random_pure({d, d}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(schmidt_decompose(psi));
}
BENCHMARK(BM_Schmidt)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
