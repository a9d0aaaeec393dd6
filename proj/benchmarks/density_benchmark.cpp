#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cohesion/corpus.hpp"
#include "cohesion/dotplot.hpp"
#include "cohesion/segmenter.hpp"

namespace {

using namespace cohesion;

Concatenation benchmark_stream(std::size_t documents) {
    SynthSpec spec;
    spec.documents = documents;
    spec.words_per_doc = {550, 650};
    spec.vocabulary_size = 150 * documents;
    spec.topic_skew = 0.8;
    spec.seed = 7;
    return merge(synthesize(spec));
}

void BM_OutsideDensity(benchmark::State& state) {
    const Concatenation concat = benchmark_stream(5);
    auto [vocab, index] = build_index(concat.stream);
    // Evenly spread partition of the requested size.
    std::vector<Position> partition{0};
    const std::size_t segments = state.range(0);
    for (std::size_t j = 1; j < segments; ++j)
        partition.push_back(j * concat.n / segments);

    for (auto _ : state)
        benchmark::DoNotOptimize(outside_density(index, partition));
}
BENCHMARK(BM_OutsideDensity)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_InsertBestBoundary(benchmark::State& state) {
    const Concatenation concat = benchmark_stream(state.range(0));
    auto [vocab, index] = build_index(concat.stream);
    const auto candidates = candidate_positions(concat.stream, Granularity::Sentence);
    BoundarySet boundaries;

    for (auto _ : state)
        benchmark::DoNotOptimize(insert_best_boundary(index, boundaries, candidates, 100));
    state.counters["candidates"] = static_cast<double>(candidates.size());
}
BENCHMARK(BM_InsertBestBoundary)->Arg(2)->Arg(5)->Arg(8);

void BM_Segment(benchmark::State& state) {
    const Concatenation concat = benchmark_stream(state.range(0));
    auto [vocab, index] = build_index(concat.stream);
    SegmenterConfig config;

    for (auto _ : state)
        benchmark::DoNotOptimize(segment(index, concat.stream, config));
}
BENCHMARK(BM_Segment)->Arg(2)->Arg(5)->Arg(8);

void BM_DotplotPoints(benchmark::State& state) {
    const Concatenation concat = benchmark_stream(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(dotplot_points(concat.stream));
}
BENCHMARK(BM_DotplotPoints);

} // namespace
