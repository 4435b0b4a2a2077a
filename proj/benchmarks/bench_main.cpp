// Copyright 2026 The trisqueeze Authors
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

#include "trisqueeze/entanglement.hpp"
#include "trisqueeze/extremum.hpp"
#include "trisqueeze/scan.hpp"
#include "trisqueeze/squeezing.hpp"

namespace {

using namespace trisqueeze;

std::vector<FamilySpec> general_states(std::size_t n) {
    SamplerConfig cfg;
    cfg.count = n;
    cfg.amplitude_mode = AmplitudeMode::Complex;
    return sample_family(Family::General, cfg);
}

void BM_EigenHermitian8(benchmark::State &state) {
    const DensityMatrix rho = pure_density(build_state(general_states(1)[0]));
    const ComplexMatrix pt = partial_transpose(rho.matrix(), Mode::i);
    for (auto _ : state) benchmark::DoNotOptimize(eigen_hermitian(pt));
}
BENCHMARK(BM_EigenHermitian8);

void BM_TripartiteNegativity(benchmark::State &state) {
    const DensityMatrix rho = pure_density(build_state(general_states(1)[0]));
    for (auto _ : state) benchmark::DoNotOptimize(tripartite_negativity(rho));
}
BENCHMARK(BM_TripartiteNegativity);

void BM_SqueezeReport(benchmark::State &state) {
    const DensityMatrix rho = pure_density(build_state(general_states(1)[0]));
    for (auto _ : state) benchmark::DoNotOptimize(squeeze_report(rho));
}
BENCHMARK(BM_SqueezeReport);

void BM_ClosedForm(benchmark::State &state) {
    SamplerConfig cfg;
    cfg.count = 1;
    const FamilySpec spec = sample_family(Family::III_2, cfg)[0];
    for (auto _ : state) benchmark::DoNotOptimize(lambda_closed_form(spec));
}
BENCHMARK(BM_ClosedForm);

void BM_EvaluateAll(benchmark::State &state) {
    SamplerConfig cfg;
    cfg.count = static_cast<std::size_t>(state.range(0));
    const std::vector<FamilySpec> specs = sample_family(Family::III_3, cfg);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_all(specs, kZeroNegativity, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvaluateAll)->Arg(1000);

void BM_FindExtremum(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_extremum(Family::III_1A, Quantity::lambda_jk, Goal::Minimize, {}, 41));
    }
}
BENCHMARK(BM_FindExtremum)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
