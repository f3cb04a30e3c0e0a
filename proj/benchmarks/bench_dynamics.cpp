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

#include "qcc/lindblad.hpp"

namespace {

using namespace qcc;

LindbladGenerator bench_generator(Eigen::Index dim) {
  Rng rng(91 + dim);
  CMatrix jump(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) jump(i, j) = 0.3 * rng.normal_cplx();
  return make_generator(random_hermitian(dim, rng), {jump});
}

void BM_MatrixExp(benchmark::State& state) {
  const CMatrix a = generator_liouville(bench_generator(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_exp(a));
  }
}
BENCHMARK(BM_MatrixExp)->Arg(2)->Arg(4)->Arg(8);

void BM_Propagator(benchmark::State& state) {
  const LindbladGenerator g = bench_generator(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagator(g, 0.7));
  }
}
BENCHMARK(BM_Propagator)->Arg(2)->Arg(4);

void BM_Resolvent(benchmark::State& state) {
  const LindbladGenerator g = bench_generator(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(resolvent(g, 1.0));
  }
}
BENCHMARK(BM_Resolvent)->Arg(2)->Arg(4)->Arg(8);

}  // namespace
