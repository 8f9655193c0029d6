#include <benchmark/benchmark.h>

#include "plawbg/pipeline.hpp"
#include "plawbg/synth.hpp"

namespace {

plawbg::AdjacencyMatrix make_graph(std::uint64_t n) {
    plawbg::GeneratorSpec spec;
    spec.exponent = 1.8;
    spec.n_samples = n;
    spec.seed = 7;
    return plawbg::incidence_to_adjacency(plawbg::sample_graph(spec));
}

void BM_IncidenceToAdjacency(benchmark::State& state) {
    plawbg::GeneratorSpec spec;
    spec.exponent = 1.8;
    spec.n_samples = static_cast<std::uint64_t>(state.range(0));
    spec.seed = 7;
    const auto incidence = plawbg::sample_graph(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(plawbg::incidence_to_adjacency(incidence));
    }
}
BENCHMARK(BM_IncidenceToAdjacency)->Arg(1000)->Arg(10000);

void BM_DegreeDistribution(benchmark::State& state) {
    const auto a = make_graph(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        const auto degrees = plawbg::degree_vector(a, plawbg::Direction::out);
        benchmark::DoNotOptimize(
            plawbg::degree_distribution(degrees, plawbg::Direction::out));
    }
}
BENCHMARK(BM_DegreeDistribution)->Arg(1000)->Arg(10000);

void BM_FitExhaustive(benchmark::State& state) {
    const auto a = make_graph(10000);
    const auto degrees = plawbg::degree_vector(a, plawbg::Direction::out);
    const auto dist = plawbg::degree_distribution(degrees, plawbg::Direction::out);
    plawbg::FitConfig cfg;
    cfg.max_bins = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(plawbg::fit_perfect_power_law(dist, cfg));
    }
}
BENCHMARK(BM_FitExhaustive)->Arg(32)->Arg(128);

void BM_FullPipeline(benchmark::State& state) {
    const auto a = make_graph(static_cast<std::uint64_t>(state.range(0)));
    plawbg::PipelineOptions opts;
    for (auto _ : state) {
        benchmark::DoNotOptimize(plawbg::run_pipeline(a, opts));
    }
}
BENCHMARK(BM_FullPipeline)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
