// Copyright 2026 The corrnoise Authors
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

#include "corrnoise/canonical.hpp"
#include "corrnoise/measures.hpp"
#include "corrnoise/scoring.hpp"
#include "corrnoise/simulate.hpp"

namespace {

using namespace corrnoise;

void BM_Badness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::uint64_t> basis;
  for (std::uint64_t k = 0; k < (1ULL << n); k += 3) basis.push_back(k);
  const DfsSpec dfs(n, basis);
  const GateOp gate{GateKind::CNOT, {1, n}};
  for (auto _ : state) benchmark::DoNotOptimize(badness(gate, dfs, n));
}
BENCHMARK(BM_Badness)->Arg(2)->Arg(6)->Arg(10);

void BM_ScoreCanonical(benchmark::State& state) {
  const auto circuits = canonical_circuits();
  const DfsSpec dfs = DfsSpec::minus();
  for (auto _ : state) {
    for (const auto& [label, c] : circuits) benchmark::DoNotOptimize(score_circuit(c, dfs));
  }
}
BENCHMARK(BM_ScoreCanonical);

void BM_Ensemble(benchmark::State& state) {
  const Circuit c = canonical_circuit("dj_h");
  const NoiseModel noise = NoiseModel::from_asymmetry(0.11, 1.0, 1.0);
  EnsembleConfig cfg;
  cfg.n_realizations_initial = static_cast<std::size_t>(state.range(0));
  cfg.max_realizations = cfg.n_realizations_initial;
  cfg.threads = 1;
  cfg.keep_density_matrices = false;
  for (auto _ : state) benchmark::DoNotOptimize(run_ensemble(c, StateVector::basis(2, 0), {0, 0}, noise, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Ensemble)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
