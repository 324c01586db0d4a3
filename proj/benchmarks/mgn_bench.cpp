// Copyright 2026 The mgn Authors
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

#include "mgn/census/census.hpp"
#include "mgn/modforms/eigenform.hpp"
#include "mgn/symrep/partition.hpp"
#include "mgn/symrep/representation.hpp"
#include "mgn/tautcalc/generator.hpp"
#include "mgn/tautcalc/intersection.hpp"
#include "mgn/tautcalc/length.hpp"

static void BM_CensusG1(benchmark::State& state) {
  auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mgn::census::census_g1(p, 11));
}
BENCHMARK(BM_CensusG1)->Arg(31)->Arg(101)->Arg(199)->Unit(benchmark::kMillisecond);

static void BM_CensusG2(benchmark::State& state) {
  auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mgn::census::census_g2(p, 5));
}
BENCHMARK(BM_CensusG2)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_Eigenform(benchmark::State& state) {
  auto order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mgn::modforms::eigenform(18, order));
}
BENCHMARK(BM_Eigenform)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_LrProduct(benchmark::State& state) {
  mgn::symrep::Partition a(std::vector<int>(10, 1));
  for (auto _ : state) benchmark::DoNotOptimize(mgn::symrep::lr_product(a, a));
}
BENCHMARK(BM_LrProduct)->Unit(benchmark::kMillisecond);

// Cold memo: the table is process-wide, so only the first iteration recurses.
static void BM_PsiIntegral(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mgn::tautcalc::psi_integral(g, {3 * g - 2}));
}
BENCHMARK(BM_PsiIntegral)->Arg(4)->Arg(6)->Arg(8)->Iterations(1);

static void BM_GeneratorLengths(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long count = 0;
    for (int k = 0; k <= 3 + n; ++k) {
      mgn::tautcalc::for_each_generator(2, k, mgn::tautcalc::unnumbered_legs(n), [&](const mgn::tautcalc::DecoratedGenerator& gen) {
        count += mgn::tautcalc::generator_length(gen).pass;
      });
    }
    mgn::tautcalc::clear_length_cache();
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_GeneratorLengths)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
