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

#include "entangle/distill.hpp"

namespace {

using namespace entangle;

void BM_RecurrenceStep(benchmark::State& state) {
  const auto rho = random_density({2, 2}, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(recurrence_step(rho));
}
BENCHMARK(BM_RecurrenceStep);

void BM_FidelityMap(benchmark::State& state) {
  double f = 0.75;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fidelity_map(f));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_FidelityMap);

void BM_IterateState(benchmark::State& state) {
  const auto rho = isotropic(0.6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(iterate_state(rho, 0.99, 20, true));
}
BENCHMARK(BM_IterateState);

// Arguments: local dimension, copies.
void BM_Distillability(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto copies = static_cast<std::size_t>(state.range(1));
  const auto rho = random_density({d, d}, d * d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(distillability_test(rho, copies, 1, 3));
}
BENCHMARK(BM_Distillability)->Args({2, 1})->Args({3, 1})->Args({4, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
