#include <benchmark/benchmark.h>

#include "icsched/dp_solver.hpp"
#include "icsched/generator.hpp"
#include "icsched/oracle.hpp"
#include "icsched/reduction.hpp"

using namespace ics;

static void BM_decide_random(benchmark::State& state) {
    const auto n = state.range(0);
    const auto m = static_cast<int>(state.range(1));
    std::vector<Instance> instances;
    for (std::uint64_t seed = 0; seed < 32; ++seed)
        instances.push_back(
            random_instance(seed, n, m, GeneratorStyle::target_slack(2), 14));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide(instances[i++ % instances.size()]).outcome);
    }
}
BENCHMARK(BM_decide_random)->Args({6, 2})->Args({8, 2})->Args({8, 3})->Args({12, 3});

static void BM_decide_reduced_four_items(benchmark::State& state) {
    const ReductionOutput out =
        reduce_bin_packing(BinPackingInstance{3, {1, 2, 2, 3}, 3}, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide(out.instance).outcome);
    }
}
BENCHMARK(BM_decide_reduced_four_items);

static void BM_decide_reduced_tight_no_instance(benchmark::State& state) {
    SolveOptions options;
    options.budget = std::int64_t{1} << 50;
    const ReductionOutput out =
        reduce_bin_packing(BinPackingInstance{7, {5, 5, 5, 5, 5}, 3}, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide(out.instance, options).outcome);
    }
}
BENCHMARK(BM_decide_reduced_tight_no_instance)->Unit(benchmark::kMillisecond);

static void BM_brute_force_oracle(benchmark::State& state) {
    std::vector<Instance> instances;
    for (std::uint64_t seed = 0; seed < 32; ++seed)
        instances.push_back(
            random_instance(seed, 6, 3, GeneratorStyle::unconstrained(), 12));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_decide(instances[i++ % instances.size()]));
    }
}
BENCHMARK(BM_brute_force_oracle);

BENCHMARK_MAIN();
