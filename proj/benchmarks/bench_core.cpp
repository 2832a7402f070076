// Copyright 2026 The catlab Authors
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

#include "catlab/analysis.hpp"
#include "catlab/indices.hpp"
#include "catlab/measurement.hpp"
#include "catlab/thermal.hpp"

using namespace catlab;

static void BM_HermExpm(benchmark::State& state) {
    const int n = int(state.range(0));
    const Operator h = SpinHamiltonian{n, 1.0, {0.3, 0.2, 0.4}, Boundary::Periodic}.realize();
    for (auto _ : state) benchmark::DoNotOptimize(herm_expm(h, -0.7));
}
BENCHMARK(BM_HermExpm)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_GibbsToC(benchmark::State& state) {
    const int n = int(state.range(0));
    const Operator h = SpinHamiltonian::free(n, 1.0).realize();
    const Operator mx = total_magnetization(Axis::X, n).realize();
    const Operator p = mz_projector(n, 0);
    for (auto _ : state) {
        const QuantumState post = post_state(gibbs_state(h, 1.0), OutcomeSpec::exact(0));
        benchmark::DoNotOptimize(expect_c(post, mx, p));
    }
}
BENCHMARK(BM_GibbsToC)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_ClosedForm(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(c_closed_form_interval(n, -n / 5 - (n / 5) % 2, n / 5 + (n / 5) % 2, 1.0));
}
BENCHMARK(BM_ClosedForm)->Arg(1000)->Arg(100000);

static void BM_ObservableSearch(benchmark::State& state) {
    const int n = int(state.range(0));
    const QuantumState rho = fixture_state(Fixture::RhoEx2, n);
    for (auto _ : state) benchmark::DoNotOptimize(observable_search(rho).c_value);
}
BENCHMARK(BM_ObservableSearch)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_PauliDecomposition(benchmark::State& state) {
    const int n = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pauli_decomposition_c(n, 0).settings);
}
BENCHMARK(BM_PauliDecomposition)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
