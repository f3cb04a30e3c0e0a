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

#include "qcc/channel.hpp"
#include "qcc/verifier.hpp"

namespace {

using namespace qcc;

void BM_FromKraus(benchmark::State& state) {
  Rng rng(81);
  const QuantumChannel c = random_channel(state.range(0), 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(from_kraus(c.kraus));
  }
}
BENCHMARK(BM_FromKraus)->Arg(2)->Arg(4)->Arg(8);

void BM_ChoiToKraus(benchmark::State& state) {
  Rng rng(82);
  const QuantumChannel c = random_channel(state.range(0), 4, rng);
  const Eigen::Index d = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(choi_to_kraus(c.choi, d, d));
  }
}
BENCHMARK(BM_ChoiToKraus)->Arg(2)->Arg(4)->Arg(8);

void BM_DressedMap(benchmark::State& state) {
  const QccInstance inst = make_qcc_instance(
      cidentity(2), iid_noise(bit_flip(0.1), 3), repetition_code_pair(), 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dressed_map(inst));
  }
}
BENCHMARK(BM_DressedMap);

void BM_QccAlpha(benchmark::State& state) {
  const QccInstance inst = make_qcc_instance(
      cidentity(2), iid_noise(bit_flip(0.1), 3), repetition_code_pair(), 0.1);
  OptBudget budget;
  budget.restarts = 16;
  budget.iters = 200;
  budget.bruteforce_resolution = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcc_alpha(inst, budget).alpha_hat);
  }
}
BENCHMARK(BM_QccAlpha);

}  // namespace
