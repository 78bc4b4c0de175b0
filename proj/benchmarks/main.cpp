// Copyright 2026 The Authors.
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

#include <cstdint>
#include <vector>

#include "rst/experiments.hpp"
#include "rst/hitting.hpp"
#include "rst/matroid.hpp"
#include "rst/process.hpp"

namespace rst {
namespace {

void BM_GenerateTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    ProcessTrace trace =
        generate_trace(ProcessConfig::make(n, 2, seed++));
    benchmark::DoNotOptimize(trace.edges.data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{n} * (n - 1) / 2));
}
BENCHMARK(BM_GenerateTrace)->Arg(100)->Arg(300)->Arg(1000);

void BM_GeneratePrefix(benchmark::State& state) {
  // Rejection-sampled short prefix of a large process, the law-cell shape.
  const int n = static_cast<int>(state.range(0));
  const std::int64_t m = m_for_c(0.0, n, 2, Event::kConnectivity);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    ProcessTrace trace =
        generate_trace(ProcessConfig::make(n, 2, seed++, m));
    benchmark::DoNotOptimize(trace.edges.data());
  }
  state.SetItemsProcessed(state.iterations() * m);
}
BENCHMARK(BM_GeneratePrefix)->Arg(10000)->Arg(30000);

void BM_FirstConnectTime(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProcessTrace trace = generate_trace(ProcessConfig::make(n, 2, 7));
  for (auto _ : state) {
    auto t = first_connect_time(trace);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_FirstConnectTime)->Arg(300)->Arg(1000);

void BM_FirstRainbowTime(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProcessTrace trace = generate_trace(ProcessConfig::make(n, 2, 7));
  for (auto _ : state) {
    auto t = first_rainbow_time(trace);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_FirstRainbowTime)->Arg(100)->Arg(300)->Arg(1000);

void BM_KappaRestricted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProcessTrace trace = generate_trace(ProcessConfig::make(n, 2, 7));
  const std::int64_t m = trace.config.m_max / 2;
  std::vector<Color> colors;
  for (Color c = 0; c < trace.config.w_size; c += 2) colors.push_back(c);
  for (auto _ : state) {
    int kappa = kappa_restricted(trace, m, colors);
    benchmark::DoNotOptimize(kappa);
  }
}
BENCHMARK(BM_KappaRestricted)->Arg(100)->Arg(1000);

void BM_Certify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ProcessTrace trace = generate_trace(ProcessConfig::make(n, 2, 7));
  const std::int64_t m = trace.config.m_max;
  for (auto _ : state) {
    Certificate cert = certify(trace, m);
    benchmark::DoNotOptimize(&cert);
  }
}
BENCHMARK(BM_Certify)->Arg(50)->Arg(200);

void BM_RunTrial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    TrialResult r = run_trial(n, 2, seed++);
    benchmark::DoNotOptimize(&r);
  }
}
BENCHMARK(BM_RunTrial)->Arg(100)->Arg(300)->Arg(1000);

}  // namespace
}  // namespace rst

BENCHMARK_MAIN();
