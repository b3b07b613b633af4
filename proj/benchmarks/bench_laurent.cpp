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

#include "alexinv/laurent.hpp"
#include "alexinv/randgen.hpp"

namespace {

alexinv::LaurentPoly dense_poly(int genus, int nterms, std::uint64_t seed) {
  alexinv::SplitMix64 rng(seed);
  alexinv::LaurentPoly p(genus);
  for (int t = 0; t < nterms; ++t) {
    alexinv::ExpVec e(2 * static_cast<std::size_t>(genus));
    for (auto& v : e) v = static_cast<int>(rng.below(5)) - 2;
    p += alexinv::LaurentPoly::monomial(
        genus, e, alexinv::make_rational(
                      static_cast<long>(rng.below(7)) - 3, 1 + rng.below(4)));
  }
  return p;
}

void BM_laurent_mul(benchmark::State& state) {
  int terms = static_cast<int>(state.range(0));
  alexinv::LaurentPoly p = dense_poly(3, terms, 11);
  alexinv::LaurentPoly q = dense_poly(3, terms, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p * q);
  }
}

void BM_shifted_expand(benchmark::State& state) {
  int bound = static_cast<int>(state.range(0));
  alexinv::LaurentPoly p = dense_poly(3, 12, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexinv::shifted_expand(p, bound));
  }
}

}  // namespace

BENCHMARK(BM_laurent_mul)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_shifted_expand)->DenseRange(3, 6);
