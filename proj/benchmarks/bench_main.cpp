#include <benchmark/benchmark.h>

#include "exseq/cohomology.hpp"
#include "exseq/poset.hpp"
#include "exseq/toric.hpp"
#include "exseq/x2.hpp"

using namespace exseq;

static void BM_CohomologyWindow(benchmark::State& state) {
    VarietySpec s = state.range(0) == 0 ? VarietySpec::toric(4, 3, {0, -1, -1}) : VarietySpec::cotangent(int(state.range(0)));
    for (auto _ : state) {
        std::int64_t acc = 0;
        for (int i = -12; i <= 12; ++i)
            for (int j = -12; j <= 12; ++j) acc += h_dims(s, {i, j})[0];
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * 625);
}
BENCHMARK(BM_CohomologyWindow)->Arg(0)->Arg(2)->Arg(3)->Arg(4);

static void BM_EnumerateX2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_mes_x2(int(state.range(0)), 1));
}
BENCHMARK(BM_EnumerateX2)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateToric(benchmark::State& state) {
    VarietySpec s = VarietySpec::toric(2, 2, {0, -1});
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_mes(s, int(state.range(0))));
}
BENCHMARK(BM_EnumerateToric)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ExceptionalOrders(benchmark::State& state) {
    VarietySpec s = x2_spec();
    auto sets = enumerate_mes_x2(8, 1);
    for (auto _ : state) {
        std::size_t n = 0;
        for (const auto& m : sets) n += exceptional_orders(s, m).orders.size();
        benchmark::DoNotOptimize(n);
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(sets.size()));
}
BENCHMARK(BM_ExceptionalOrders)->Unit(benchmark::kMillisecond);

static void BM_LinearExtensionsAntichain(benchmark::State& state) {
    std::size_t n = std::size_t(state.range(0));
    std::vector<Bundle> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back({int(k), 0});
    for (auto _ : state) {
        bool trunc = false;
        benchmark::DoNotOptimize(linear_extensions(Relation(n), labels, 1000000, &trunc));
    }
}
BENCHMARK(BM_LinearExtensionsAntichain)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
