// Copyright 2026 The Chordal Transversals Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "chordal/campaign.hpp"
#include "chordal/chordal_rep.hpp"
#include "chordal/generators.hpp"
#include "chordal/leafage.hpp"
#include "chordal/oracle.hpp"

namespace {

using namespace chordal;

Graph Instance(GenKind kind, int n, double density) {
  GenSpec spec;
  spec.kind = kind;
  spec.n = n;
  spec.seed = 11;
  spec.density = density;
  return Generate(spec).graph;
}

OracleConfig Config(bool parallel) {
  OracleConfig config;
  config.parallel = parallel;
  config.max_path_vertices = 16;
  config.max_cycle_vertices = 14;
  return config;
}

void BM_LongestPaths(benchmark::State& state) {
  const Graph g = Instance(GenKind::kChordal, static_cast<int>(state.range(0)),
                           0.9);
  const OracleConfig config = Config(state.range(1) != 0);
  std::size_t members = 0;
  for (auto _ : state) {
    LongestFamily family = LongestPaths(g, config);
    members = family.size();
    benchmark::DoNotOptimize(family);
  }
  state.counters["members"] = static_cast<double>(members);
}
BENCHMARK(BM_LongestPaths)
    ->ArgNames({"n", "parallel"})
    ->ArgsProduct({{10, 13, 16}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_LongestCycles(benchmark::State& state) {
  const Graph g = Instance(GenKind::kChordal2Conn,
                           static_cast<int>(state.range(0)), 0.7);
  const OracleConfig config = Config(state.range(1) != 0);
  std::size_t members = 0;
  for (auto _ : state) {
    LongestFamily family = LongestCycles(g, config);
    members = family.size();
    benchmark::DoNotOptimize(family);
  }
  state.counters["members"] = static_cast<double>(members);
}
BENCHMARK(BM_LongestCycles)
    ->ArgNames({"n", "parallel"})
    ->ArgsProduct({{9, 12}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_AuxDigraph(benchmark::State& state) {
  const Graph g = Instance(GenKind::kChordal, static_cast<int>(state.range(0)),
                           0.2);
  const TreeRep rep = MinimalTreeRepresentation(g);
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(AuxDigraph(g, rep, parallel));
  }
}
BENCHMARK(BM_AuxDigraph)
    ->ArgNames({"n", "parallel"})
    ->ArgsProduct({{14, 20}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_LctCampaign(benchmark::State& state) {
  CampaignSpec spec;
  spec.kind = CampaignKind::kLct;
  spec.trials = 40;
  spec.parallel = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunCampaign(spec));
  }
}
BENCHMARK(BM_LctCampaign)
    ->ArgName("parallel")
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
