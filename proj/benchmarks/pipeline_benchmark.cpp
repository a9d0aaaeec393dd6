#include <benchmark/benchmark.h>

#include <string>

#include "cohesion/corpus.hpp"
#include "cohesion/dotplot.hpp"
#include "cohesion/text.hpp"

namespace {

using namespace cohesion;

std::string sample_text() {
    SynthSpec spec;
    spec.documents = 1;
    spec.words_per_doc = {4000, 4000};
    spec.vocabulary_size = 600;
    spec.topic_skew = 0.0;
    spec.seed = 3;
    return render_text(synthesize(spec)[0].doc);
}

void BM_Tokenize(benchmark::State& state) {
    const std::string text = sample_text();
    for (auto _ : state)
        benchmark::DoNotOptimize(tokenize(text));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Tokenize);

void BM_Lemmatize(benchmark::State& state) {
    const char* words[] = {"boundaries", "stopped", "houses", "running",
                           "cat",        "weddings", "miss",   "trying"};
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lemmatize(words[i & 7]));
        ++i;
    }
}
BENCHMARK(BM_Lemmatize);

void BM_MarkContent(benchmark::State& state) {
    const Document doc = tokenize(sample_text());
    const Stoplist stoplist = Stoplist::defaults();
    for (auto _ : state) {
        Document copy = doc;
        benchmark::DoNotOptimize(mark_content(std::move(copy), stoplist));
    }
}
BENCHMARK(BM_MarkContent);

void BM_BuildIndex(benchmark::State& state) {
    const Document doc = mark_content(tokenize(sample_text()), Stoplist::defaults());
    for (auto _ : state)
        benchmark::DoNotOptimize(build_index(doc));
}
BENCHMARK(BM_BuildIndex);

} // namespace
