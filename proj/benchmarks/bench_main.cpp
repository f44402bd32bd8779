#include "cbp/discrepancy.hpp"
#include "cbp/harness.hpp"
#include "cbp/offline.hpp"
#include "cbp/online.hpp"

#include <benchmark/benchmark.h>

namespace {

cbp::Instance random_instance(int n, int colors, cbp::SizeRegime regime) {
    cbp::RandomSpec spec;
    spec.seed = 1234;
    spec.n = n;
    spec.colors = colors;
    spec.regime = regime;
    return cbp::gen_random(spec);
}

void BM_Lb2Streaming(benchmark::State& state) {
    const auto inst = random_instance(static_cast<int>(state.range(0)), 5,
                                      cbp::SizeRegime::zero);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cbp::lb2(inst));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Lb2Streaming)->Range(1 << 8, 1 << 14);

void BM_Lb2Oracle(benchmark::State& state) {
    const auto inst = random_instance(static_cast<int>(state.range(0)), 5,
                                      cbp::SizeRegime::zero);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cbp::lb2_oracle(inst));
    }
}
BENCHMARK(BM_Lb2Oracle)->Range(1 << 6, 1 << 10);

void BM_BafRun(benchmark::State& state) {
    const auto inst = random_instance(static_cast<int>(state.range(0)), 5,
                                      cbp::SizeRegime::zero);
    for (auto _ : state) {
        cbp::Baf baf;
        benchmark::DoNotOptimize(cbp::run_online(baf, inst));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BafRun)->Range(1 << 6, 1 << 12);

void BM_AnyFitRun(benchmark::State& state) {
    const auto inst = random_instance(static_cast<int>(state.range(0)), 3,
                                      cbp::SizeRegime::uniform);
    for (auto _ : state) {
        cbp::AnyFit ff(cbp::FitPolicy::first);
        benchmark::DoNotOptimize(cbp::run_online(ff, inst));
    }
}
BENCHMARK(BM_AnyFitRun)->Range(1 << 6, 1 << 12);

void BM_ExactOpt(benchmark::State& state) {
    const auto inst = random_instance(static_cast<int>(state.range(0)), 3,
                                      cbp::SizeRegime::uniform);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cbp::exact_opt(inst));
    }
}
BENCHMARK(BM_ExactOpt)->DenseRange(8, 14, 2);

}  // namespace

BENCHMARK_MAIN();
