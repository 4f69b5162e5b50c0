// Copyright 2026 The rdnc Authors
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


// Serial reference vs OpenMP for the two data-parallel kernels.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "rdnc/mac_distortion.hpp"
#include "rdnc/oracle.hpp"

namespace {

using namespace rdnc;

Scenario mac_fixture() {
  Scenario scn;
  scn.sources = {{BinarySource{4.0, 0.3}, LogLinear{0.5}, LogRate{2.0}},
                 {BinarySource{4.0, 0.2}, LogLinear{2.0}, LogRate{1.0}}};
  scn.region = GaussianMacRegion{{7.0, 3.0}, 1.0};
  scn.options.caps = {10.0, 10.0, 1e-9};
  return scn;
}

std::vector<MacScenario> mac_batch(std::size_t n) {
  std::mt19937_64 rng(42);
  auto u = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  std::vector<MacScenario> batch(n);
  for (auto& s : batch) {
    s.sources = {BinarySource{u(0.1, 5.0), u(0.05, 0.5)},
                 BinarySource{u(0.1, 5.0), u(0.05, 0.5)}};
    s.powers = {u(0.0, 20.0), u(0.0, 20.0)};
    s.noise = u(0.1, 4.0);
    s.delta = {u(0.1, 10.0), u(0.1, 10.0)};
  }
  return batch;
}

void BM_GridSerial(benchmark::State& state) {
  const Scenario scn = mac_fixture();
  const GridSpec grid = default_grid(scn, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grid_search_num_serial(scn, grid));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(grid_points(scn, grid)));
}

void BM_GridParallel(benchmark::State& state) {
  const Scenario scn = mac_fixture();
  const GridSpec grid = default_grid(scn, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grid_search_num(scn, grid));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(grid_points(scn, grid)));
}

void BM_MacBatchSerial(benchmark::State& state) {
  const auto batch = mac_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cross_check_batch_serial(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MacBatchParallel(benchmark::State& state) {
  const auto batch = mac_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cross_check_batch(batch));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_GridSerial)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MacBatchSerial)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MacBatchParallel)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
