// Copyright 2026 The analog-search-lab authors
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

#include "asl/bounds.hpp"
#include "asl/discrimination.hpp"
#include "asl/kinematics.hpp"
#include "asl/prior.hpp"
#include "asl/propagator.hpp"
#include "asl/regions.hpp"

namespace {

void BM_TransitionProbability(benchmark::State& state) {
  const asl::SearchConfig cfg = asl::SearchConfig::with_h(0.8, 1.1);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        asl::transition_probability_general(cfg, t).value());
    t += 1e-3;
  }
}
BENCHMARK(BM_TransitionProbability);

void BM_Eigensystem(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const asl::HamiltonianSpec h =
      asl::build_fullspace_hamiltonian(n, 1.1, 1.0, 0);
  for (auto _ : state) {
    asl::HermitianEigensystem eig(h);
    benchmark::DoNotOptimize(eig.eigenvalues().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigensystem)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_EvolveExact2d(benchmark::State& state) {
  const asl::SearchConfig cfg = asl::SearchConfig::with_h(0.8, 1.1);
  const asl::HamiltonianSpec h = asl::build_hamiltonian_2d(cfg);
  const asl::StateVector s = asl::source_state_2d(cfg);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(asl::evolve_exact(h, s, t, cfg.hbar));
    t += 1e-3;
  }
}
BENCHMARK(BM_EvolveExact2d);

void BM_DistanceSum(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(asl::distance_terms(n, 1.1, 1.0, 1.0, 1.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceSum)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_ScanRegions(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::vector<double> xs = asl::make_x_axis(n);
  const std::vector<double> gs = asl::make_gamma_axis(n, 1.0, 10.0);
  const asl::DiscriminationSetup prior =
      asl::DiscriminationSetup::from_asymmetry(100.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(asl::scan_regions(xs, gs, 0.995, prior));
}
BENCHMARK(BM_ScanRegions)->Arg(64)->Arg(128)->Arg(256);

void BM_PriorQuadrature(benchmark::State& state) {
  const asl::PriorSpec spec{16, 1.0, asl::PriorKind::damped_gaussian, 10.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(asl::prob_overlap_at_least(spec, 0.95).value);
}
BENCHMARK(BM_PriorQuadrature);

void BM_Table1(benchmark::State& state) {
  const std::vector<double> xs{0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95};
  for (auto _ : state)
    benchmark::DoNotOptimize(asl::make_table1(xs, 1.1, 100.0, 1.0, 1.0));
}
BENCHMARK(BM_Table1);

}  // namespace

BENCHMARK_MAIN();
