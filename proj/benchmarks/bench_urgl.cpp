// Copyright 2026 The urgl Authors
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

#include "urgl/quantumness.hpp"
#include "urgl/random.hpp"
#include "urgl/reference.hpp"
#include "urgl/sic.hpp"

namespace {

using namespace urgl;

void BM_FramePotential(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng = make_rng(1);
  const Ket psi = haar_ket(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(frame_potential(psi));
}
BENCHMARK(BM_FramePotential)->DenseRange(2, 8);

void BM_PhiMatrix(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng = make_rng(2);
  const ReferenceApparatus ref = random_reference(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(phi_matrix(ref));
}
BENCHMARK(BM_PhiMatrix)->DenseRange(2, 5);

void BM_RandomReference(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng = make_rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(random_reference(d, rng));
}
BENCHMARK(BM_RandomReference)->DenseRange(2, 4);

void BM_QuantumnessDistance(benchmark::State& state) {
  Rng rng = make_rng(4);
  const PhiMatrix phi = phi_matrix(random_reference(3, rng));
  const NormSpec spec = NormSpec::trace();
  for (auto _ : state) benchmark::DoNotOptimize(quantumness_distance(phi, spec));
}
BENCHMARK(BM_QuantumnessDistance);

void BM_FindSic(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_sic_fiducial(d, ++seed));
}
BENCHMARK(BM_FindSic)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
