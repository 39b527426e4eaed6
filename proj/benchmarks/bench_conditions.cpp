// Copyright 2026 The goqec Authors
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

#include <benchmark/benchmark.h>

#include "goqec/goqec.hpp"

namespace {

using namespace goqec;  // NOLINT

// Arg(0) = dim_A; dim_B = 3, dim_B1 = 2, one complement state.
SpaceDecomposition shape(const benchmark::State& state) {
  return SpaceDecomposition(static_cast<int>(state.range(0)), 3, 2, 1);
}

void BM_CheckAmpliate(benchmark::State& state) {
  const SpaceDecomposition d = shape(state);
  const KrausChannel ch = random_ampliate_channel(d, 3, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_ampliate_noiseless(ch, d, 1e-9));
  }
}
BENCHMARK(BM_CheckAmpliate)->Arg(2)->Arg(4)->Arg(8);

void BM_CheckCorrectable(benchmark::State& state) {
  const SpaceDecomposition d = shape(state);
  const KrausChannel ch = random_ampliate_channel(d, 3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_correctable(ch, d, 1e-9));
  }
}
BENCHMARK(BM_CheckCorrectable)->Arg(2)->Arg(4)->Arg(8);

void BM_SynthesizeRecovery(benchmark::State& state) {
  const SpaceDecomposition d = shape(state);
  const KrausChannel ch = random_ampliate_channel(d, 3, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize_recovery(ch, d, 1e-9));
  }
}
BENCHMARK(BM_SynthesizeRecovery)->Arg(2)->Arg(4)->Arg(8);

void BM_Oracle(benchmark::State& state) {
  const SpaceDecomposition d = shape(state);
  const KrausChannel ch = random_ampliate_channel(d, 3, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bruteforce_noiseless_oracle(ch, d, 20, 0, 1e-8));
  }
}
BENCHMARK(BM_Oracle)->Arg(2)->Arg(4);

void BM_Apply(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const KrausChannel ch = random_channel(dim, 4, 5);
  const Matrix rho = random_density(dim, 6).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_channel(ch, rho));
  }
}
BENCHMARK(BM_Apply)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
