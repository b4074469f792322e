// Copyright 2026 The mompoly Authors
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

#include "mompoly/counter.hpp"
#include "mompoly/ehrhart.hpp"
#include "mompoly/patterns.hpp"
#include "mompoly/transfer.hpp"

namespace {

using namespace mompoly;

void BM_CountDpUnitary22(benchmark::State& state) {
  const FamilySpec spec(Group::U, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_dp(spec, state.range(0), Strictness::lax));
}
BENCHMARK(BM_CountDpUnitary22)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_CountDpSymplectic12(benchmark::State& state) {
  const FamilySpec spec(Group::SP, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_dp(spec, state.range(0), Strictness::lax));
}
BENCHMARK(BM_CountDpSymplectic12)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_CountNaiveSymplectic21(benchmark::State& state) {
  const FamilySpec spec(Group::SP, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_naive(spec, state.range(0), Strictness::lax));
}
BENCHMARK(BM_CountNaiveSymplectic21)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_InterpolateUnitary22(benchmark::State& state) {
  const FamilySpec spec(Group::U, 2, 2);
  const auto table = count_series(spec, spec.dimension(), Strictness::lax);
  for (auto _ : state) benchmark::DoNotOptimize(interpolate(table, spec.dimension()));
}
BENCHMARK(BM_InterpolateUnitary22)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
