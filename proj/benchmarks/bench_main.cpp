// Copyright 2026 The Ballistic Authors
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

#include <numbers>
#include <random>

#include "ballistic/compiler.hpp"
#include "ballistic/device_physics.hpp"
#include "ballistic/gates.hpp"
#include "ballistic/simulator.hpp"
#include "ballistic/wavepacket.hpp"

namespace {

using namespace ballistic;

void BM_ApplyHadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector sv = init_register(n);
  const auto h = hadamard().matrix;
  const std::vector<int> target{n / 2};
  for (auto _ : state) {
    apply_matrix(sv.mutable_amplitudes(), n, h, target);
    benchmark::DoNotOptimize(sv.mutable_amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sv.dimension()));
}
BENCHMARK(BM_ApplyHadamard)->DenseRange(8, 20, 4);

void BM_ApplyControlledPhase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector sv = init_register(n);
  const auto cp = controlled_phase(0.3).matrix;
  const std::vector<int> targets{0, 1};
  for (auto _ : state) {
    apply_matrix(sv.mutable_amplitudes(), n, cp, targets);
    benchmark::DoNotOptimize(sv.mutable_amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sv.dimension()));
}
BENCHMARK(BM_ApplyControlledPhase)->DenseRange(8, 20, 4);

void BM_ScatterDoubleBarrier(benchmark::State& state) {
  const auto spec = ScatteringRegion::double_barrier(5.0, 0.1, 1.0);
  double e = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scatter(spec, e));
    e = e < 4.0 ? e + 1e-3 : 0.5;
  }
}
BENCHMARK(BM_ScatterDoubleBarrier);

void BM_FindResonances(benchmark::State& state) {
  const auto spec = ScatteringRegion::double_barrier(5.0, 0.1, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(find_resonances(spec, {0.01, 4.99, 2048}, 16));
}
BENCHMARK(BM_FindResonances)->Unit(benchmark::kMillisecond);

void BM_Decompose1q(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> a(-std::numbers::pi, std::numbers::pi);
  const Eigen::Matrix2cd u = (phase_gate(a(rng)).matrix * hadamard().matrix * phase_gate(a(rng)).matrix);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_1q(u));
}
BENCHMARK(BM_Decompose1q);

void BM_RouteLinearChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CircuitIR c;
  c.num_qubits = n;
  for (int q = 0; q < n; ++q) c.add(Instruction::h(q));
  for (int q = 1; q < n; ++q) c.add(Instruction::cnot(0, q));
  for (auto _ : state) benchmark::DoNotOptimize(route_lnn(c));
}
BENCHMARK(BM_RouteLinearChain)->DenseRange(4, 16, 4);

void BM_CrankNicolsonTransit(benchmark::State& state) {
  const double v = 0.5;
  const auto region = ScatteringRegion::step(v, resonance_width(v, PhaseKind::kStep, 1));
  const auto plan = plan_transit(region, 10.0, 24);
  for (auto _ : state)
    benchmark::DoNotOptimize(evolve(plan.grid, plan.placed, plan.packet, plan.steps));
}
BENCHMARK(BM_CrankNicolsonTransit)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
