// Copyright 2026 The qnd-sim Authors
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

#include <benchmark/benchmark.h>

#include "qnd/sweep.hpp"

namespace {

qnd::CircuitConfig balanced() {
  qnd::CircuitConfig config;
  config.balanced_loss = true;
  return config;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto grid = qnd::alpha_grid(0.0, qnd::strong_alpha(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qnd::weak_sweep_serial(qnd::equal_superposition(), grid, balanced()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepOpenMP(benchmark::State& state) {
  const auto grid = qnd::alpha_grid(0.0, qnd::strong_alpha(), static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qnd::weak_sweep(qnd::equal_superposition(), grid, balanced(), threads));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(50)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOpenMP)->ArgsProduct({{50, 1000}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
