// Copyright 2026 The UPB Dimer Authors
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

// Serial against OpenMP timings for the grid scans. Thread count follows
// UPB_THREADS, then OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "upb/analytic.hpp"
#include "upb/experiments.hpp"
#include "upb/parallel.hpp"

namespace {

using upb::Execution;
namespace ex = upb::experiments;

upb::DimerParams locus_point() {
  upb::DimerParams p;
  p.hopping = 0.4;
  const auto loc = upb::analytic::locus_quadrature(p.hopping, 1.0);
  p.kerr = loc.kerr;
  p.detuning = loc.detuning;
  return p;
}

void BM_Landscape(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  const int cutoff = static_cast<int>(state.range(1));
  const auto f = ex::linspace(0.01, 0.25, 8);
  const auto delta = ex::linspace(-0.5, 0.5, 8);
  upb::DriveSpec d;
  d.amplitude = 0.01;
  ex::LandscapeOptions opts;
  opts.cutoff = cutoff;
  opts.exec = exec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ex::landscape_scan(f, delta, locus_point(), d, opts));
  }
  state.SetLabel(exec == Execution::serial
                     ? std::string("serial")
                     : "parallel, " + std::to_string(upb::thread_limit()) + " threads");
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.size() * delta.size()));
}
BENCHMARK(BM_Landscape)
    ->ArgsProduct({{static_cast<long>(Execution::serial), static_cast<long>(Execution::parallel)},
                   {4, 7}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_PhaseScan(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  const auto j = ex::linspace(0.3, 1.0, 8);
  std::vector<double> phi;
  for (double deg : ex::linspace(1.0, 179.0, 179)) phi.push_back(upb::deg_to_rad(deg));
  for (auto _ : state) benchmark::DoNotOptimize(ex::phase_locus_scan(j, phi, 1.0, exec));
  state.SetLabel(upb::to_string(exec));
}
BENCHMARK(BM_PhaseScan)
    ->Arg(static_cast<long>(Execution::serial))
    ->Arg(static_cast<long>(Execution::parallel))
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_Compensation(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  const auto grid = ex::linspace(-0.2, 0.2, 8);
  for (auto _ : state) benchmark::DoNotOptimize(ex::compensation_scan(grid, ex::disorder_nominal(), exec));
  state.SetLabel(upb::to_string(exec));
}
BENCHMARK(BM_Compensation)
    ->Arg(static_cast<long>(Execution::serial))
    ->Arg(static_cast<long>(Execution::parallel))
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
