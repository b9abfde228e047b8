// Copyright 2026 The qchan Authors
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

#include "qchan/choi.hpp"
#include "qchan/geometry.hpp"
#include "qchan/metrics.hpp"
#include "qchan/physical.hpp"

namespace {

using namespace qchan;

PhysicalParams figure_params(double temperature, double r) {
  PhysicalParams p;
  p.temperature = temperature;
  p.squeeze_r = r;
  p.squeeze_phi = 0.3;
  p.time = 0.5;
  return p;
}

void BM_Eigh4(benchmark::State& state) {
  RandomSource rng(1);
  const Mat4 m = random_density_matrix<4>(rng);
  for (auto _ : state) benchmark::DoNotOptimize(eigh<4>(m));
}
BENCHMARK(BM_Eigh4);

void BM_SgadChoi(benchmark::State& state) {
  const auto d = derive_params(figure_params(1.0, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(choi_from_bloch(sgad_bloch_map(d)));
}
BENCHMARK(BM_SgadChoi);

void BM_CanonicalKraus(benchmark::State& state) {
  const auto c = choi_from_bloch(sgad_bloch_map(figure_params(1.0, 1.0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_kraus(c));
}
BENCHMARK(BM_CanonicalKraus);

void BM_ChoiEntropy(benchmark::State& state) {
  const auto c = choi_from_bloch(sgad_bloch_map(figure_params(1.0, 1.0)));
  for (auto _ : state) benchmark::DoNotOptimize(choi_entropy(c));
}
BENCHMARK(BM_ChoiEntropy);

void BM_ChannelFidelityKappa(benchmark::State& state) {
  const Channel ch = sgad_bloch_map(figure_params(1.0, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(channel_fidelity_kappa(ch));
}
BENCHMARK(BM_ChannelFidelityKappa)->Unit(benchmark::kMicrosecond);

void BM_GateFidelity(benchmark::State& state) {
  const Channel ch = sgad_bloch_map(figure_params(1.0, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(gate_fidelity(ch));
}
BENCHMARK(BM_GateFidelity)->Unit(benchmark::kMillisecond);

void BM_MasterEquation(benchmark::State& state) {
  const auto d = derive_params(figure_params(1.0, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_master_equation(d, Vec3(0.3, 0.2, 0.1)));
}
BENCHMARK(BM_MasterEquation)->Unit(benchmark::kMicrosecond);

void BM_ConvexityProbe(benchmark::State& state) {
  const auto c1 = choi_from_bloch(sgad_bloch_map(figure_params(0.2, 0.0)));
  const auto c2 = choi_from_bloch(sgad_bloch_map(figure_params(2.0, 1.5)));
  for (auto _ : state) benchmark::DoNotOptimize(sgad_convexity_probe(c1, c2, 0.5));
}
BENCHMARK(BM_ConvexityProbe)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
