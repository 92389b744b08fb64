#include <benchmark/benchmark.h>

#include "icsched/analysis.hpp"
#include "icsched/generator.hpp"

using namespace ics;

static void BM_profile(benchmark::State& state) {
    const Instance instance = random_instance(
        1, state.range(0), 4, GeneratorStyle::unconstrained(), 1 << 20);
    for (auto _ : state) {
        benchmark::DoNotOptimize(profile(instance).height);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_profile)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oNLogN);

static void BM_split_at_gaps(benchmark::State& state) {
    Instance instance = random_instance(2, state.range(0), 2,
                                        GeneratorStyle::target_slack(1), 64);
    // spread jobs into well-separated clusters
    for (std::size_t k = 0; k < instance.jobs.size(); ++k) {
        const Time shift = static_cast<Time>(k / 8) * 1000;
        instance.jobs[k].release += shift;
        instance.jobs[k].deadline += shift;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(split_at_gaps(instance).size());
    }
}
BENCHMARK(BM_split_at_gaps)->Range(1 << 6, 1 << 12);
