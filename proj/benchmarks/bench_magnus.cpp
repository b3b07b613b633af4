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

#include "alexinv/magnus.hpp"
#include "alexinv/mapclass.hpp"

namespace {

void BM_magnus_expand_relator(benchmark::State& state) {
  int bound = static_cast<int>(state.range(0));
  alexinv::FreeWord relator = alexinv::surface_relator(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexinv::magnus_expand(relator, bound));
  }
}

void BM_surface_algebra_build(benchmark::State& state) {
  int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    alexinv::SurfaceAlgebra algebra(2, bound);
    benchmark::DoNotOptimize(algebra);
  }
}

void BM_johnson_depth_twist(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  alexinv::TwistSpec twist = alexinv::separating_twist(g, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexinv::johnson_depth(twist.endo, 4));
  }
}

void BM_graded_lie_dims(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexinv::graded_lie_dims(g, 5));
  }
}

}  // namespace

BENCHMARK(BM_magnus_expand_relator)->DenseRange(3, 6);
BENCHMARK(BM_surface_algebra_build)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_johnson_depth_twist)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_graded_lie_dims)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
