#include <doctest.h>

#include <random>
#include <sstream>

#include "cohesion/text.hpp"

using namespace cohesion;

TEST_CASE("tokenize splits words and sentences") {
    Document doc = tokenize("The cat sat. The cat slept.");
    REQUIRE(doc.n == 6);
    REQUIRE(doc.tokens.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(doc.tokens[i].position == i + 1);
    CHECK(doc.tokens[0].surface == "The");
    CHECK(doc.tokens[0].lemma == "the");
    REQUIRE(doc.sentence_spans.size() == 2);
    CHECK(doc.sentence_spans[0] == Span{1, 3});
    CHECK(doc.sentence_spans[1] == Span{4, 6});
    REQUIRE(doc.paragraph_spans.size() == 1);
    CHECK(doc.paragraph_spans[0] == Span{1, 6});
}

TEST_CASE("tokenize single word") {
    Document doc = tokenize("Hi.");
    CHECK(doc.n == 1);
    REQUIRE(doc.sentence_spans.size() == 1);
    CHECK(doc.sentence_spans[0] == Span{1, 1});
}

TEST_CASE("tokenize paragraph spans follow blank lines") {
    Document doc = tokenize("A b.\n\nC d.");
    REQUIRE(doc.paragraph_spans.size() == 2);
    CHECK(doc.paragraph_spans[0] == Span{1, 2});
    CHECK(doc.paragraph_spans[1] == Span{3, 4});
    REQUIRE(doc.sentence_spans.size() == 2);
    CHECK(doc.sentence_spans[1] == Span{3, 4});
}

TEST_CASE("tokenize rejects wordless input") {
    CHECK_THROWS_AS(tokenize(""), EmptyDocumentError);
    CHECK_THROWS_AS(tokenize("   \n\t  \n"), EmptyDocumentError);
    CHECK_THROWS_AS(tokenize("... !!! ---"), EmptyDocumentError);
}

TEST_CASE("tokenize keeps internal apostrophes and hyphens") {
    Document doc = tokenize("Don't use state-of-the-art 'quotes' here.");
    REQUIRE(doc.n == 5);
    CHECK(doc.tokens[0].surface == "Don't");
    CHECK(doc.tokens[2].surface == "state-of-the-art");
    CHECK(doc.tokens[3].surface == "quotes");
}

TEST_CASE("punctuation occupies no word position") {
    Document doc = tokenize("Hello, world! Yes?!");
    REQUIRE(doc.n == 3);
    CHECK(doc.tokens[1].surface == "world");
    CHECK(doc.tokens[1].position == 2);
}

TEST_CASE("sentence break needs whitespace plus uppercase") {
    CHECK(tokenize("End.Next word.").sentence_spans.size() == 1);
    CHECK(tokenize("End. next word.").sentence_spans.size() == 1);
    CHECK(tokenize("End. Next word.").sentence_spans.size() == 2);
    // A paragraph break ends the sentence even without punctuation.
    Document doc = tokenize("no punctuation\n\nAnother block.");
    CHECK(doc.sentence_spans.size() == 2);
    CHECK(doc.sentence_spans[0] == Span{1, 2});
}

TEST_CASE("tokenize is deterministic") {
    const std::string text = "One two. Three!\n\nFour five? Six.";
    CHECK(tokenize(text) == tokenize(text));
}

TEST_CASE("sentence spans tile 1..n") {
    std::mt19937_64 rng(7);
    const std::string words[] = {"alpha", "Beta", "gamma", "Delta", "epsilon"};
    for (int iter = 0; iter < 50; ++iter) {
        std::string text;
        const std::size_t len = 1 + rng() % 60;
        for (std::size_t i = 0; i < len; ++i) {
            text += words[rng() % 5];
            switch (rng() % 6) {
                case 0: text += ". "; break;
                case 1: text += "! "; break;
                case 2: text += "\n\n"; break;
                default: text += " ";
            }
        }
        Document doc = tokenize(text);
        Position next = 1;
        for (const Span& s : doc.sentence_spans) {
            CHECK(s.first == next);
            CHECK(s.last >= s.first);
            next = s.last + 1;
        }
        CHECK(next == doc.n + 1);
        // Paragraph ends coincide with sentence ends.
        auto sentence_ends = doc.sentence_end_positions();
        for (Position p : doc.paragraph_end_positions())
            CHECK(std::find(sentence_ends.begin(), sentence_ends.end(), p) !=
                  sentence_ends.end());
    }
}

TEST_CASE("sentence_ordinal locates the covering span") {
    Document doc = tokenize("A b c. D e. F.");
    CHECK(doc.sentence_ordinal(1) == 0);
    CHECK(doc.sentence_ordinal(3) == 0);
    CHECK(doc.sentence_ordinal(4) == 1);
    CHECK(doc.sentence_ordinal(6) == 2);
}

TEST_CASE("mark_content flags stoplisted tokens only") {
    Stoplist stop;
    stop.add("the");
    Document doc = mark_content(tokenize("The cat"), stop);
    CHECK_FALSE(doc.tokens[0].is_content);
    CHECK(doc.tokens[1].is_content);
    CHECK(doc.tokens[0].position == 1);
    CHECK(doc.tokens[1].position == 2);
}

TEST_CASE("empty stoplist keeps every token") {
    Document doc = mark_content(tokenize("The cat sat"), Stoplist{});
    for (const Token& tok : doc.tokens) CHECK(tok.is_content);
}

TEST_CASE("default stoplist filters BE and HAVE forms") {
    Document doc = mark_content(tokenize("is was cat"), Stoplist::defaults());
    CHECK_FALSE(doc.tokens[0].is_content);
    CHECK_FALSE(doc.tokens[1].is_content);
    CHECK(doc.tokens[2].is_content);

    Document more = mark_content(tokenize("Having been there"), Stoplist::defaults());
    CHECK_FALSE(more.tokens[0].is_content);
    CHECK_FALSE(more.tokens[1].is_content);
}

TEST_CASE("mark_content preserves token count and positions") {
    Document before = tokenize("The quick brown fox is jumping over lazy dogs.");
    Document after = mark_content(before, Stoplist::defaults());
    REQUIRE(after.tokens.size() == before.tokens.size());
    for (std::size_t i = 0; i < after.tokens.size(); ++i) {
        CHECK(after.tokens[i].position == before.tokens[i].position);
        CHECK(after.tokens[i].surface == before.tokens[i].surface);
    }
}

TEST_CASE("lemmatize handles the documented suffixes") {
    CHECK(lemmatize("cat") == "cat");
    CHECK(lemmatize("boundaries") == "boundary");
    CHECK(lemmatize("Stopped") == "stop");
    CHECK(lemmatize("houses") == "house");
    CHECK(lemmatize("boxes") == "boxe");
    CHECK(lemmatize("running") == "run");
    CHECK(lemmatize("cats") == "cat");
    CHECK(lemmatize("miss") == "miss");
    CHECK(lemmatize("trying") == "try");
    // Plural gerunds cascade through both rules.
    CHECK(lemmatize("weddings") == "wed");
    // Short words are only lowercased.
    CHECK(lemmatize("Its") == "its");
    CHECK(lemmatize("DNA") == "dna");
    // No vowel left in the stem blocks the verbal rules.
    CHECK(lemmatize("king") == "king");
}

TEST_CASE("lemmatize is idempotent") {
    std::mt19937_64 rng(11);
    const std::string suffixes[] = {"", "s", "es", "ies", "ing", "ed", "ings", "ss"};
    for (int iter = 0; iter < 4000; ++iter) {
        std::string word;
        const std::size_t stem_len = 1 + rng() % 8;
        for (std::size_t i = 0; i < stem_len; ++i)
            word += static_cast<char>('a' + rng() % 26);
        word += suffixes[rng() % 8];
        const std::string once = lemmatize(word);
        CHECK(lemmatize(once) == once);
    }
}

TEST_CASE("stoplist files allow comments and blank lines") {
    std::istringstream in("# header\nthe\n\n  And  # trailing\nOF\n");
    Stoplist stop = Stoplist::from_stream(in);
    CHECK(stop.size() == 3);
    CHECK(stop.contains("the"));
    CHECK(stop.contains("The"));
    CHECK(stop.contains("AND"));
    CHECK(stop.contains("of"));
    CHECK_FALSE(stop.contains("cat"));
}

TEST_CASE("missing stoplist file raises IoError") {
    CHECK_THROWS_AS(Stoplist::from_file("/nonexistent/stoplist.txt"), IoError);
}
