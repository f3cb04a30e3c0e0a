// Copyright 2026 The qcckit authors
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

#include "qcc/norms.hpp"

namespace {

using namespace qcc;

SuperoperatorDelta random_delta(Eigen::Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return delta_between(random_channel(dim, 2, rng),
                       random_channel(dim, 3, rng));
}

void BM_SoNorm(benchmark::State& state) {
  const auto delta = random_delta(state.range(0), 71);
  OptBudget budget;
  budget.restarts = 16;
  budget.iters = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(so_norm_sa(delta, budget).value);
  }
}
BENCHMARK(BM_SoNorm)->Arg(2)->Arg(3)->Arg(4);

void BM_DiamondNorm(benchmark::State& state) {
  const auto delta = random_delta(state.range(0), 72);
  OptBudget budget;
  budget.restarts = 16;
  budget.iters = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(diamond_norm(delta, budget).value);
  }
}
BENCHMARK(BM_DiamondNorm)->Arg(2)->Arg(3)->Arg(4);

void BM_SoBruteforce(benchmark::State& state) {
  const auto delta = random_delta(2, 73);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        so_norm_bruteforce(delta, state.range(0)).value);
  }
}
BENCHMARK(BM_SoBruteforce)->Arg(1000)->Arg(10000)->Arg(100000);

}  // namespace
