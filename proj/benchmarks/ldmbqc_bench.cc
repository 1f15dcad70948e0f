// Copyright 2026 The ldmbqc Authors
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

#include <random>

#include "ldmbqc/compiler/compiler.h"
#include "ldmbqc/contextuality/contextuality.h"
#include "ldmbqc/field/poly.h"
#include "ldmbqc/weyl/weyl.h"

namespace {

using namespace ldmbqc;

void BM_Interpolate(benchmark::State &state) {
    const auto d = static_cast<std::uint32_t>(state.range(0));
    const auto field = field::Modulus::make(d);
    std::mt19937_64 rng(1);
    std::vector<field::Element> values(field::table_size(d, 2));
    for (auto &v : values) {
        v = static_cast<field::Element>(rng() % d);
    }
    const auto table = field::FunctionTable::from_values(field, 2, values);
    for (auto _ : state) {
        benchmark::DoNotOptimize(field::interpolate(table));
    }
}
BENCHMARK(BM_Interpolate)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

void BM_ConjugateWeyl(benchmark::State &state) {
    const auto d = static_cast<std::uint32_t>(state.range(0));
    const auto V = weyl::clifford_explicit(d, {{{1, 1}, {0, 1}}}, {1, 2});
    const weyl::Vec2 v{1, 1};
    std::uint32_t f = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(weyl::conjugate_weyl(V, v, f++ % d));
    }
}
BENCHMARK(BM_ConjugateWeyl)->Arg(3)->Arg(7)->Arg(101);

void BM_CompileGeneralPrimeVerify(benchmark::State &state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    std::vector<std::uint32_t> m(p);
    for (std::uint32_t i = 0; i < p; ++i) {
        m[i] = (i * i + 1) % p;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(compiler::compile_general_prime(m));
    }
}
BENCHMARK(BM_CompileGeneralPrimeVerify)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_NcvaSearch(benchmark::State &state) {
    const auto plan = state.range(0) == 0 ? compiler::compile_nand().plan : compiler::compile_exponential(5, 2).plan;
    for (auto _ : state) {
        benchmark::DoNotOptimize(contextuality::ncva_search(plan));
    }
}
BENCHMARK(BM_NcvaSearch)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
