#include "rgl/constructions.hpp"
#include "rgl/probability.hpp"
#include "rgl/sampler.hpp"
#include "rgl/search.hpp"
#include "rgl/tuples.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

namespace {

constexpr std::uint64_t kBenchSeed = 0x9e3779b97f4a7c15ULL;

rgl::EdgeColoredGraph mixed_instance(int n) {
    return rgl::random_mixed(n, rgl::mixed_counts_for_alpha(n, 0.75), kBenchSeed);
}

void BM_RainbowGirthStarExtremal(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const rgl::EdgeColoredGraph g = rgl::star_extremal(3, r);
    for (auto _ : state) {
        auto res = rgl::rainbow_girth_exact(g, r + 1);
        benchmark::DoNotOptimize(res);
    }
    state.SetLabel("n=" + std::to_string(g.n));
}
BENCHMARK(BM_RainbowGirthStarExtremal)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_EvaluateSample(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const rgl::EdgeColoredGraph g = mixed_instance(n);
    const rgl::SamplingParameters params{0.995, 0.001, 0.995995, 0.0};
    rgl::SplitMix64 rng(kBenchSeed);
    const std::vector<bool> in_h = rgl::sample_vertices(n, params.p, rng);
    for (auto _ : state) {
        auto report = rgl::evaluate_sample(g, in_h, params);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_EvaluateSample)->Arg(500)->Arg(2000);

void BM_FindShortRainbowCycle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const rgl::EdgeColoredGraph g = mixed_instance(n);
    const auto params = rgl::find_sampling_parameters(rgl::census(g));
    for (auto _ : state) {
        auto res = rgl::find_short_rainbow_cycle(g, *params, 64, kBenchSeed);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_FindShortRainbowCycle)->Arg(500)->Arg(1000);

void BM_RepresentativeGirth(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const rgl::EdgeColoredGraph g = mixed_instance(n);
    const std::vector<bool> in_h(n, true);
    const rgl::RepresentativeSubgraph rep = rgl::representative_subgraph(g, in_h);
    for (auto _ : state) {
        auto res = rgl::girth(rep.graph);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_RepresentativeGirth)->Arg(500)->Arg(2000);

void BM_LowerBoundFamily(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto family = rgl::lower_bound_family(n, kBenchSeed);
        auto pruned = rgl::prune_overlaps(family);
        benchmark::DoNotOptimize(pruned);
    }
}
BENCHMARK(BM_LowerBoundFamily)->Arg(200)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
