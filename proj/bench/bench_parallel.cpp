// Copyright 2026 The pointing Authors
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

// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "pointing/cli/commands.hpp"
#include "pointing/experiment.hpp"

namespace {

using namespace pointing;

const CameraIntrinsics kIntr = CameraIntrinsics::default_sensor();

const std::vector<DetectionFrame>& frames() {
  static const auto f = [] {
    cli::BenchOptions o;
    o.frames = 2048;
    o.max_samples = 5000;
    return cli::bench_frames(o, kIntr);
  }();
  return f;
}

void BM_EstimateBatch(benchmark::State& state, Execution exec) {
  EstimatorConfig cfg;
  cfg.strategy = static_cast<KeypointStrategy>(state.range(0));
  const auto& batch = frames();
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_batch(batch, cfg, kIntr, exec));
  }
  state.SetItemsProcessed(state.iterations() * batch.size());
  state.SetLabel(std::string(to_string(cfg.strategy)));
}

void BM_ExperimentA(benchmark::State& state, Execution exec) {
  auto scenario = sim::Scenario::default_scenario();
  scenario.frames_per_pose = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_experiment_a(scenario, kAllStrategies, RoiParams{}, kIntr, exec));
  }
  state.SetItemsProcessed(state.iterations() * scenario.positions.size() *
                          scenario.directions.size() * scenario.frames_per_pose);
}

void strategies(benchmark::internal::Benchmark* b) {
  for (auto s : kAllStrategies) b->Arg(static_cast<int>(s));
}

}  // namespace

BENCHMARK_CAPTURE(BM_EstimateBatch, serial, Execution::kSerial)
    ->Apply(strategies)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EstimateBatch, parallel, Execution::kParallel)
    ->Apply(strategies)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ExperimentA, serial, Execution::kSerial)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ExperimentA, parallel, Execution::kParallel)
    ->Arg(20)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
