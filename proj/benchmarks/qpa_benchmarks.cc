// Copyright 2026 The QPA Calculator Authors
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

#include "qpa/dense_oracle.h"
#include "qpa/fidelity.h"
#include "qpa/gyd.h"
#include "qpa/protocol.h"
#include "qpa/schur.h"
#include "qpa/spectrum.h"
#include "qpa/young.h"

namespace {

using namespace qpa;

void BM_SchurGtSum(benchmark::State &state) {
    YoungDiagram shape({state.range(0), state.range(0) / 2, state.range(0) / 4});
    std::vector<Rational> q = parse_rational_list("1/2,3/10,1/5");
    for (auto _ : state) {
        benchmark::DoNotOptimize(schur_polynomial(shape, q));
    }
}
BENCHMARK(BM_SchurGtSum)->Arg(4)->Arg(8)->Arg(16);

void BM_SchurJacobiTrudi(benchmark::State &state) {
    YoungDiagram shape({state.range(0), state.range(0) / 2, state.range(0) / 4});
    std::vector<Rational> q = parse_rational_list("1/2,3/10,1/5");
    for (auto _ : state) {
        benchmark::DoNotOptimize(schur_jacobi_trudi(shape, q));
    }
}
BENCHMARK(BM_SchurJacobiTrudi)->Arg(4)->Arg(8)->Arg(16);

void BM_SectorFidelityAll(benchmark::State &state) {
    long n = state.range(0);
    YoungDiagram shape({n / 2, n / 3, n - n / 2 - n / 3});
    Spectrum p = parse_spectrum("1/2,3/10,1/5");
    RemovalVector r = overhang_removal(shape, 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sector_fidelity_all(shape, 1, r, p));
    }
}
BENCHMARK(BM_SectorFidelityAll)->Arg(6)->Arg(12)->Arg(24);

void BM_SectorFidelityOne(benchmark::State &state) {
    long n = state.range(0);
    YoungDiagram shape({n / 2, n / 3, n - n / 2 - n / 3});
    Spectrum p = parse_spectrum("1/2,3/10,1/5");
    YoungDiagram mu = apply_removal(shape, overhang_removal(shape, 1, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sector_fidelity_one(shape, 1, mu, p));
    }
}
BENCHMARK(BM_SectorFidelityOne)->Arg(6)->Arg(12)->Arg(24);

void BM_OverallQubit(benchmark::State &state) {
    Spectrum p = parse_spectrum("3/4,1/4");
    OverallOptions opt;
    opt.workers = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(overall_fidelity(state.range(0), 1, 1, p, opt).overall);
    }
}
BENCHMARK(BM_OverallQubit)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_OptimalChannel(benchmark::State &state) {
    YoungDiagram shape({6, 3, 1});
    Spectrum p = parse_spectrum("1/2,3/10,1/5");
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_sector_channel(shape, 1, state.range(0), p, Objective::all_site).best.value);
    }
}
BENCHMARK(BM_OptimalChannel)->Arg(1)->Arg(2)->Arg(3);

void BM_DenseTwoCopyOracle(benchmark::State &state) {
    Spectrum p = parse_spectrum("1/2,3/10,1/5");
    YoungDiagram sigma({1, 1, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(dense_two_copy_oracle(sigma, 2, YoungDiagram({1, 0, -1}), 1, p, Objective::one_site));
    }
}
BENCHMARK(BM_DenseTwoCopyOracle)->Unit(benchmark::kMillisecond);

void BM_ConstrainedSchurSkew(benchmark::State &state) {
    GeneralizedDiagram g = skew_cells(YoungDiagram({5, 3, 2}), YoungDiagram({2, 1, 0}));
    std::vector<Rational> q = parse_rational_list("1/2,3/10,1/5");
    ConstraintMap x = ConstraintMap::trivial(g, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(constrained_schur(g, 3, x, q));
    }
}
BENCHMARK(BM_ConstrainedSchurSkew);

void BM_SampleSchurWeyl(benchmark::State &state) {
    uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_sw(state.range(0), {0.5, 0.3, 0.2}, seed++));
    }
}
BENCHMARK(BM_SampleSchurWeyl)->Arg(400)->Arg(4000);

}  // namespace

BENCHMARK_MAIN();
