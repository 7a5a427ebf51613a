#include <benchmark/benchmark.h>

#include "entrovar/estimators.hpp"
#include "entrovar/experiment.hpp"
#include "entrovar/maxvar.hpp"
#include "entrovar/population.hpp"
#include "entrovar/sampling.hpp"

namespace {

void BM_SolveStationary(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(entrovar::solve_stationary(m, 1));
    }
}
BENCHMARK(BM_SolveStationary)->Arg(3)->Arg(5)->Arg(100)->Arg(100000);

void BM_PopulationStats(benchmark::State& state) {
    const auto dist = entrovar::arithmetic_distribution(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(entrovar::population_stats(dist));
    }
}
BENCHMARK(BM_PopulationStats)->Arg(5)->Arg(1000)->Arg(100000);

void BM_PlugInLambda0(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    std::vector<std::uint64_t> counts(m);
    for (std::size_t i = 0; i < m; ++i) counts[i] = i + 1;
    const auto hist = entrovar::make_histogram(std::move(counts));
    for (auto _ : state) {
        benchmark::DoNotOptimize(entrovar::plug_in_lambda0(hist));
    }
}
BENCHMARK(BM_PlugInLambda0)->Arg(5)->Arg(1000)->Arg(100000);

void BM_SampleMultinomial(benchmark::State& state) {
    const auto dist = entrovar::arithmetic_distribution(5);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    entrovar::RandomStream stream(entrovar::kDefaultSeed, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(entrovar::sample_multinomial(dist, n, stream));
    }
}
BENCHMARK(BM_SampleMultinomial)->Arg(1000)->Arg(1000000);

void BM_RunExperiment(benchmark::State& state) {
    entrovar::ExperimentConfig config;
    config.dist = entrovar::arithmetic_distribution(5);
    config.n_values = {1000, 10000};
    config.trials = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(entrovar::run_experiment(config));
    }
}
BENCHMARK(BM_RunExperiment)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
