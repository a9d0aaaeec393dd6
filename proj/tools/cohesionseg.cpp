// cohesionseg: find topic boundaries in plain text by minimizing the
// density of word repetitions that cross segment borders.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cohesion/corpus.hpp"
#include "cohesion/dotplot.hpp"
#include "cohesion/evaluation.hpp"
#include "cohesion/segmenter.hpp"
#include "cohesion/text.hpp"

namespace {

using namespace cohesion;

struct PipelineOptions {
    std::string stoplist_path;

    Stoplist stoplist() const {
        return stoplist_path.empty() ? Stoplist::defaults()
                                     : Stoplist::from_file(stoplist_path);
    }
};

struct SegmentOptions {
    Granularity granularity = Granularity::Sentence;
    std::size_t max_boundaries = 0;   // 0 = unlimited
    bool stop_on_increase = true;
    std::size_t min_separation = 100;

    SegmenterConfig config() const {
        SegmenterConfig cfg;
        cfg.granularity = granularity;
        if (max_boundaries > 0) cfg.max_boundaries = max_boundaries;
        cfg.stop_on_increase = stop_on_increase;
        cfg.min_separation_words = min_separation;
        return cfg;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write output file: " + path);
    fn(out);
}

Document load_document(const std::string& path, const PipelineOptions& pipeline) {
    return mark_content(tokenize(read_file(path)), pipeline.stoplist());
}

void add_pipeline_flags(CLI::App& cmd, PipelineOptions& pipeline) {
    cmd.add_option("--stoplist", pipeline.stoplist_path,
                   "Stoplist file (one word per line, # comments); default: built-in");
}

void add_segment_flags(CLI::App& cmd, SegmentOptions& seg) {
    static const std::map<std::string, Granularity> granularities{
        {"sentence", Granularity::Sentence}, {"paragraph", Granularity::Paragraph}};
    cmd.add_option("--granularity", seg.granularity, "Candidate boundary positions")
        ->transform(CLI::CheckedTransformer(granularities, CLI::ignore_case))
        ->default_str("sentence");
    cmd.add_option("--max-boundaries", seg.max_boundaries,
                   "Stop after this many boundaries (default: unlimited)")
        ->check(CLI::PositiveNumber);
    cmd.add_flag("--stop-on-increase,!--no-stop-on-increase", seg.stop_on_increase,
                 "Stop once the best insertion raises the outside density (default: on)");
    cmd.add_option("--min-separation", seg.min_separation,
                   "Minimum word distance between boundaries and to the stream ends");
}

int run_segment(const std::string& input, const PipelineOptions& pipeline,
                const SegmentOptions& seg, const std::string& out_path, bool annotate) {
    seg.config().validate();
    const Document doc = load_document(input, pipeline);
    const auto [vocab, index] = build_index(doc);
    const SegmentationResult result = segment(index, doc, seg.config());
    with_output(out_path,
                [&](std::ostream& out) { write_boundaries(out, result, doc, annotate); });
    return 0;
}

int run_dotplot(const std::string& input, const PipelineOptions& pipeline,
                const std::string& out_path, const std::string& pgm_path) {
    const Document doc = load_document(input, pipeline);
    const PointSet points = dotplot_points(doc);
    with_output(out_path, [&](std::ostream& out) { write_points_csv(out, points); });
    if (!pgm_path.empty()) {
        std::ofstream pgm(pgm_path, std::ios::binary);
        if (!pgm) throw IoError("cannot write raster file: " + pgm_path);
        write_dotplot_pgm(pgm, points, doc.n);
    }
    return 0;
}

int run_density(const std::string& input, const PipelineOptions& pipeline,
                Granularity granularity, const std::string& out_path) {
    const Document doc = load_document(input, pipeline);
    const auto [vocab, index] = build_index(doc);
    const std::vector<Position> candidates = candidate_positions(doc, granularity);
    const std::vector<Position> initial{0};
    const DensityCurve curve = density_curve(index, initial, candidates);
    with_output(out_path, [&](std::ostream& out) { write_density_csv(out, curve); });
    return 0;
}

int run_bench(const std::string& corpus_dir, const PipelineOptions& pipeline,
              const SegmentOptions& seg, std::size_t concats, std::uint64_t seed,
              std::size_t k_min, std::size_t k_max, std::size_t window,
              const std::string& out_path, const std::string& manifest_path) {
    seg.config().validate();
    const Stoplist stoplist = pipeline.stoplist();
    std::vector<NamedDocument> docs = load_corpus(corpus_dir);
    for (NamedDocument& named : docs) named.doc = mark_content(std::move(named.doc), stoplist);

    const std::vector<Concatenation> runs =
        concatenate(docs, concats, seed, {k_min, k_max});

    std::vector<EvalRow> rows;
    rows.reserve(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const Concatenation& concat = runs[i];
        const auto [vocab, index] = build_index(concat.stream);
        const SegmentationResult result = segment(index, concat.stream, seg.config());
        const MatchCounts counts =
            align(result.boundaries, concat.gold_boundaries, window,
                  [&](Position p) { return concat.stream.sentence_ordinal(p); });
        rows.push_back({std::to_string(i), counts, metrics(counts)});
    }

    with_output(out_path, [&](std::ostream& out) { write_eval_csv(out, rows); });
    if (!manifest_path.empty()) {
        std::ofstream manifest(manifest_path, std::ios::binary);
        if (!manifest) throw IoError("cannot write manifest file: " + manifest_path);
        write_manifest_csv(manifest, runs);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topic boundary detection from lexical repetition dotplots"};
    app.require_subcommand(1);

    PipelineOptions pipeline;
    SegmentOptions seg;
    std::string input, out_path;

    auto* segment_cmd = app.add_subcommand("segment", "Segment one text file");
    segment_cmd->add_option("input", input, "UTF-8 text file")->required();
    bool annotate = false;
    add_pipeline_flags(*segment_cmd, pipeline);
    add_segment_flags(*segment_cmd, seg);
    segment_cmd->add_option("--out", out_path, "Output path (default: stdout)");
    segment_cmd->add_flag("--annotate", annotate,
                          "Append sentence ordinal and density to each boundary");

    auto* bench_cmd =
        app.add_subcommand("bench", "Concatenation benchmark over a corpus directory");
    std::string corpus_dir, manifest_path;
    std::size_t concats = 150, k_min = 2, k_max = 8, window = 3;
    std::uint64_t seed = 1;
    bench_cmd->add_option("corpus", corpus_dir, "Directory of .txt documents")->required();
    add_pipeline_flags(*bench_cmd, pipeline);
    add_segment_flags(*bench_cmd, seg);
    bench_cmd->add_option("--concats", concats, "Number of concatenations to draw");
    bench_cmd->add_option("--k-min", k_min, "Fewest documents per concatenation");
    bench_cmd->add_option("--k-max", k_max, "Most documents per concatenation");
    bench_cmd->add_option("--window", window, "Close-match window in sentences");
    bench_cmd->add_option("--seed", seed, "Sampling seed");
    bench_cmd->add_option("--out", out_path, "Evaluation CSV path (default: stdout)");
    bench_cmd->add_option("--manifest", manifest_path, "Also write a concatenation manifest");

    auto* dotplot_cmd = app.add_subcommand("dotplot", "Emit word-repetition points as CSV");
    std::string pgm_path;
    dotplot_cmd->add_option("input", input, "UTF-8 text file")->required();
    add_pipeline_flags(*dotplot_cmd, pipeline);
    dotplot_cmd->add_option("--out", out_path, "Output path (default: stdout)");
    dotplot_cmd->add_option("--pgm", pgm_path, "Also write a plain PGM raster");

    auto* density_cmd =
        app.add_subcommand("density", "Outside density of every candidate boundary");
    density_cmd->add_option("input", input, "UTF-8 text file")->required();
    add_pipeline_flags(*density_cmd, pipeline);
    static const std::map<std::string, Granularity> granularities{
        {"sentence", Granularity::Sentence}, {"paragraph", Granularity::Paragraph}};
    density_cmd->add_option("--granularity", seg.granularity, "Candidate positions")
        ->transform(CLI::CheckedTransformer(granularities, CLI::ignore_case))
        ->default_str("sentence");
    density_cmd->add_option("--out", out_path, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (segment_cmd->parsed())
            return run_segment(input, pipeline, seg, out_path, annotate);
        if (bench_cmd->parsed())
            return run_bench(corpus_dir, pipeline, seg, concats, seed, k_min, k_max, window,
                             out_path, manifest_path);
        if (dotplot_cmd->parsed()) return run_dotplot(input, pipeline, out_path, pgm_path);
        if (density_cmd->parsed())
            return run_density(input, pipeline, seg.granularity, out_path);
    } catch (const ConfigError& e) {
        std::cerr << "cohesionseg: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "cohesionseg: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
