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

#include "entangle/linalg.hpp"
#include "entangle/states.hpp"

namespace {

using namespace entangle;

void BM_HermitianEig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rho = random_density({n}, n, 1).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(rho));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_Eigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rho = random_density({n}, n, 2).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(rho));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(4, 64);

void BM_PartialTranspose(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Dims dims{d, d};
  const auto rho = random_density(dims, d, 3).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(partial_transpose(rho, dims, 0));
}
BENCHMARK(BM_PartialTranspose)->DenseRange(2, 8, 2);

void BM_PartialTrace(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Dims dims{d, d};
  const auto rho = random_density(dims, d, 4).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, dims, 0));
}
BENCHMARK(BM_PartialTrace)->DenseRange(2, 8, 2);

void BM_Tensor(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto a = random_density({d}, d, 5).matrix();
  const auto b = random_density({d}, d, 6).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(tensor(a, b));
}
BENCHMARK(BM_Tensor)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
