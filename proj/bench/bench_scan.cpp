// Copyright 2026 The torus-ppt Authors
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

// Serial reference kernels against their OpenMP versions.
//
//   ./bench_scan --benchmark_filter=Scan

#include <benchmark/benchmark.h>

#include "torus_ppt/cones.hpp"
#include "torus_ppt/random.hpp"
#include "torus_ppt/scan.hpp"

namespace {

using namespace torus_ppt;

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_ScanWerner(benchmark::State& state) {
  ScanSpec spec = parse_scan_argument("p:-0.5:1.5:" + std::to_string(state.range(1)));
  spec.base.name = "werner";
  spec.base.d = 4;
  for (auto _ : state) benchmark::DoNotOptimize(scan_family(spec, mode(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_ScanWerner)->ArgsProduct({{0, 1}, {101, 1001}})->Unit(benchmark::kMillisecond);

void BM_OracleSweep(benchmark::State& state) {
  Rng rng(1);
  std::vector<ClassState> states;
  for (int k = 0; k < 500; ++k) states.emplace_back(random_isotropic_like(4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep(states, kDefaultTol, mode(state)));
  state.SetItemsProcessed(state.iterations() * 500);
}
BENCHMARK(BM_OracleSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ProductColumns(benchmark::State& state) {
  Rng rng(2);
  std::vector<ProductVectorPair> gens;
  for (int k = 0; k < 2000; ++k) gens.push_back(random_product_pair(4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(product_columns(gens, 4, mode(state)));
  state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_ProductColumns)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
