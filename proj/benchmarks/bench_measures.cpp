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

#include "entangle/measures.hpp"

namespace {

using namespace entangle;

void BM_VonNeumannEntropy(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto rho = random_density({d, d}, d * d, 1);
  for (auto _ : state) benchmark::DoNotOptimize(von_neumann_entropy(rho));
}
BENCHMARK(BM_VonNeumannEntropy)->DenseRange(2, 4, 1);

void BM_Formation(benchmark::State& state) {
  const auto rho = random_density({2, 2}, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_of_formation(rho, 0, 1, 3));
}
BENCHMARK(BM_Formation)->Unit(benchmark::kMillisecond);

void BM_RelativeEntropy(benchmark::State& state) {
  const auto rho = random_density({2, 2}, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(relative_entropy_estimate(rho, 0, 1, 5));
}
BENCHMARK(BM_RelativeEntropy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
