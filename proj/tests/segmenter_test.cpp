#include <doctest.h>

#include <random>
#include <sstream>

#include "cohesion/segmenter.hpp"
#include "test_support.hpp"

using namespace cohesion;
using test_support::make_stream;
using test_support::oracle_best_insertion;
using test_support::random_stream;

namespace {

const std::vector<std::string> kFixture{"a", "b", "a", "c", "b", "c"};

// Sentence ends at 2,3,4,5,6 so the interior candidates are 2..5.
Document fixture_doc() {
    return make_stream(kFixture, {2, 3, 4, 5, 6});
}

} // namespace

TEST_CASE("candidate_positions drops the final stream position") {
    Document doc = make_stream({"a", "b", "c", "d", "e", "f"}, {3, 6});
    CHECK(candidate_positions(doc, Granularity::Sentence) == std::vector<Position>{3});

    Document para = make_stream(std::vector<std::string>(16, "x"), {5, 12, 16});
    para.paragraph_spans = {{1, 5}, {6, 12}, {13, 16}};
    CHECK(candidate_positions(para, Granularity::Paragraph) ==
          std::vector<Position>{5, 12});

    Document single = make_stream({"a", "b"});
    CHECK(candidate_positions(single, Granularity::Sentence).empty());
}

TEST_CASE("paragraph candidates are a subset of sentence candidates") {
    Document doc = make_stream(std::vector<std::string>(12, "x"), {3, 6, 9, 12});
    doc.paragraph_spans = {{1, 6}, {7, 12}};
    const auto sentence = candidate_positions(doc, Granularity::Sentence);
    const auto paragraph = candidate_positions(doc, Granularity::Paragraph);
    CHECK(paragraph.size() <= sentence.size());
    for (Position p : paragraph)
        CHECK(std::binary_search(sentence.begin(), sentence.end(), p));
}

TEST_CASE("insert_best_boundary picks the density argmin") {
    auto [vocab, index] = build_index(fixture_doc());

    BoundarySet base;
    auto best = insert_best_boundary(index, base, std::vector<Position>{2, 3, 4}, 0);
    REQUIRE(best.has_value());
    CHECK(best->position == 3);
    CHECK(best->density == doctest::Approx(1.0 / 9.0));

    BoundarySet extended;
    extended.insert(3);
    auto tied = insert_best_boundary(index, extended, std::vector<Position>{4, 5}, 0);
    REQUIRE(tied.has_value());
    // Positions 4 and 5 land on the same density; the smaller one wins.
    CHECK(tied->position == 4);
    CHECK(tied->density == doctest::Approx(1.0 / 9.0 + 0.5));

    auto none = insert_best_boundary(index, base, std::vector<Position>{2, 3, 4}, 100);
    CHECK_FALSE(none.has_value());
}

TEST_CASE("insert_best_boundary skips candidates already placed") {
    auto [vocab, index] = build_index(fixture_doc());
    BoundarySet boundaries;
    boundaries.insert(3);
    auto best = insert_best_boundary(index, boundaries, std::vector<Position>{3}, 0);
    CHECK_FALSE(best.has_value());
}

TEST_CASE("segment stops when density would rise") {
    Document doc = fixture_doc();
    auto [vocab, index] = build_index(doc);
    SegmenterConfig config;
    config.min_separation_words = 0;
    config.stop_on_increase = true;

    SegmentationResult result = segment(index, doc, config);
    CHECK(result.boundaries == std::vector<Position>{3});
    REQUIRE(result.trace.size() == 1);
    CHECK(result.trace[0].position == 3);
    CHECK(result.trace[0].density == doctest::Approx(1.0 / 9.0));
}

TEST_CASE("segment honors the boundary budget on a flat objective") {
    Document doc = make_stream({"a", "b", "c", "d", "e"}, {1, 2, 3, 4, 5});
    auto [vocab, index] = build_index(doc);
    SegmenterConfig config;
    config.min_separation_words = 0;
    config.max_boundaries = 2;

    SegmentationResult result = segment(index, doc, config);
    // All densities are zero, so ties send both insertions leftmost.
    CHECK(result.boundaries == std::vector<Position>{1, 2});
    CHECK(result.trace.size() == 2);
    for (const InsertionStep& step : result.trace) CHECK(step.density == 0.0);
}

TEST_CASE("segment returns no boundaries without candidates") {
    Document doc = make_stream(kFixture);   // single sentence
    auto [vocab, index] = build_index(doc);
    SegmenterConfig config;
    config.min_separation_words = 0;
    SegmentationResult result = segment(index, doc, config);
    CHECK(result.boundaries.empty());
    CHECK(result.trace.empty());
}

TEST_CASE("config needs a stopping rule") {
    SegmenterConfig config;
    config.stop_on_increase = false;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config.max_boundaries = 3;
    CHECK_NOTHROW(config.validate());
    config.max_boundaries = 0;
    CHECK_THROWS_AS(config.validate(), ConfigError);
}

TEST_CASE("greedy step matches the exhaustive oracle") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 40; ++iter) {
        Document doc = random_stream(rng, 120, 6, 1.0);
        auto [vocab, index] = build_index(doc);
        std::vector<Position> candidates;
        for (Position p = 1; p < doc.n; ++p)
            if (rng() % 3 == 0) candidates.push_back(p);
        BoundarySet boundaries;
        if (!candidates.empty() && rng() % 2) {
            boundaries.insert(candidates[rng() % candidates.size()]);
        }
        const std::size_t min_sep = rng() % 4;

        auto got = insert_best_boundary(index, boundaries, candidates, min_sep);
        auto expected =
            oracle_best_insertion(doc, boundaries.positions, candidates, min_sep);
        REQUIRE(got.has_value() == expected.has_value());
        if (got) {
            CHECK(got->position == expected->position);
            CHECK(got->density == expected->density);
        }
    }
}

TEST_CASE("segmentation invariants on random streams") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 15; ++iter) {
        Document doc = random_stream(rng, 500, 14, 0.9);
        bool has_content = false;
        for (const Token& tok : doc.tokens) has_content |= tok.is_content;
        if (!has_content) continue;
        auto [vocab, index] = build_index(doc);

        SegmenterConfig config;
        config.min_separation_words = 1 + rng() % 40;
        config.max_boundaries = 1 + rng() % 6;
        SegmentationResult result = segment(index, doc, config);

        CHECK(result.trace.size() == result.boundaries.size());
        CHECK(result.boundaries.size() <= *config.max_boundaries);

        const auto candidates = candidate_positions(doc, config.granularity);
        for (std::size_t i = 0; i < result.boundaries.size(); ++i) {
            const Position b = result.boundaries[i];
            CHECK(std::binary_search(candidates.begin(), candidates.end(), b));
            CHECK(b >= config.min_separation_words);
            CHECK(doc.n - b >= config.min_separation_words);
            if (i > 0)
                CHECK(b - result.boundaries[i - 1] >= config.min_separation_words);
        }

        // Deterministic end to end, trace included.
        SegmentationResult again = segment(index, doc, config);
        CHECK(again.boundaries == result.boundaries);
        REQUIRE(again.trace.size() == result.trace.size());
        for (std::size_t i = 0; i < result.trace.size(); ++i) {
            CHECK(again.trace[i].position == result.trace[i].position);
            CHECK(again.trace[i].density == result.trace[i].density);
        }
    }
}

TEST_CASE("write_boundaries plain and annotated forms") {
    Document doc = fixture_doc();
    auto [vocab, index] = build_index(doc);
    SegmenterConfig config;
    config.min_separation_words = 0;
    SegmentationResult result = segment(index, doc, config);

    std::ostringstream plain;
    write_boundaries(plain, result, doc, false);
    CHECK(plain.str() == "3\n");

    std::ostringstream annotated;
    write_boundaries(annotated, result, doc, true);
    CHECK(annotated.str() == "3\t2\t0.111111\n");
}
