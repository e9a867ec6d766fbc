// Copyright 2026 The pgext Authors
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

#include <random>

#include "pgext/snf.h"

namespace {

pgext::IntMatrix RandomMatrix(std::mt19937& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> entry(-range, range);
  pgext::IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto m = RandomMatrix(rng, static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgext::SmithNormalForm(m));
  }
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 10, 2);

void BM_Determinant(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto m = RandomMatrix(rng, static_cast<std::size_t>(state.range(0)), 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgext::Determinant(m));
  }
}
BENCHMARK(BM_Determinant)->DenseRange(2, 10, 4);

}  // namespace
