/* Copyright 2026 The alexinv Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <benchmark/benchmark.h>

#include "alexinv/fox.hpp"
#include "alexinv/symrep.hpp"

namespace {

void BM_graded_dimension_g2(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        alexinv::graded_dimension(2, n, alexinv::default_truncation(n)));
  }
}

void BM_graded_dimension_g3(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        alexinv::graded_dimension(3, n, alexinv::default_truncation(n)));
  }
}

void BM_weyl_dim(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  alexinv::DominantWeight lambda = alexinv::weight_sum(
      alexinv::fundamental_weight(g, 1, 3), alexinv::fundamental_weight(g, 2, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexinv::weyl_dim(lambda));
  }
}

}  // namespace

BENCHMARK(BM_graded_dimension_g2)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_graded_dimension_g3)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weyl_dim)->DenseRange(2, 4);
