// Copyright 2026 The biunitary Authors
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

#include "biunitary/algebra.hpp"
#include "biunitary/hadamard.hpp"
#include "biunitary/squares.hpp"
#include "biunitary/tower.hpp"

namespace {

using namespace biu;

// Tower levels up to m for F_n; args: n, m.
void BM_Tower(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto f = fourier(n);
  for (auto _ : state) {
    TowerCache cache(f, m);
    benchmark::DoNotOptimize(cache.unitary(m).data().data());
  }
}
BENCHMARK(BM_Tower)->Args({2, 5})->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

// Relative commutant of N_{2k} for (F_n, F_n); args: n, k.
void BM_RelativeCommutant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const auto gens = n_generators(fourier(n), fourier(n), k, Parity::kEven);
  const Split split{n, int_pow(n, k + 1)};
  for (auto _ : state) benchmark::DoNotOptimize(relative_commutant(gens, split).dimension());
}
BENCHMARK(BM_RelativeCommutant)->Args({2, 0})->Args({2, 1})->Args({4, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);

// Both biunitarity criteria on BU(F_n, F_n; l); args: n, l.
void BM_BiunitaryCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto level = static_cast<std::size_t>(state.range(1));
  const auto bu = biunitary_bu(fourier(n), fourier(n), level);
  const Split split{n, int_pow(n, level + 1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_biunitary_blockwise(bu, split).overall);
    benchmark::DoNotOptimize(is_biunitary_via_square(bu, split).overall);
  }
}
BENCHMARK(BM_BiunitaryCheck)->Args({3, 0})->Args({4, 1})->Args({5, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
