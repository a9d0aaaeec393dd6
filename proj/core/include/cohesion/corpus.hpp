#ifndef COHESION_CORPUS_HPP
#define COHESION_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cohesion/text.hpp"

namespace cohesion {

struct NamedDocument {
    std::string id;   // file name or synthetic id
    Document doc;
};

// Documents glued end to end with the join positions recorded as gold
// boundaries.
struct Concatenation {
    Document stream;
    std::vector<Position> gold_boundaries;   // cumulative word counts at joins
    std::vector<std::string> source_ids;
    std::size_t n = 0;
};

struct SynthSpec {
    std::size_t documents = 2;
    std::pair<std::size_t, std::size_t> words_per_doc{550, 650};
    std::size_t vocabulary_size = 400;
    // Probability that a word is drawn from the document's own topic block
    // rather than the shared vocabulary. 0 = fully shared, 1 = disjoint.
    double topic_skew = 0.9;
    std::uint64_t seed = 0;
    std::pair<std::size_t, std::size_t> sentence_words{20, 29};          // mean 24.5
    std::pair<std::size_t, std::size_t> sentences_per_paragraph{2, 4};

    void validate() const;   // throws ConfigError
};

// Tokenize every *.txt file in `directory`, lexicographic name order.
// Throws IoError naming the offending file or the empty directory.
std::vector<NamedDocument> load_corpus(const std::filesystem::path& directory);

// Glue documents in the given order; positions are re-based and spans
// shifted, gold boundaries land on the joins.
Concatenation merge(std::span<const NamedDocument> docs);

// Draw `count` concatenations of k documents each, k uniform in k_range,
// documents sampled without replacement within a concatenation and with
// replacement across them. Deterministic per seed.
std::vector<Concatenation> concatenate(std::span<const NamedDocument> docs,
                                       std::size_t count,
                                       std::uint64_t seed,
                                       std::pair<std::size_t, std::size_t> k_range = {2, 8});

// Generate documents whose content words come from per-document topic
// blocks mixed with a shared vocabulary, so repetition within a document
// exceeds repetition across documents. Deterministic per seed.
std::vector<NamedDocument> synthesize(const SynthSpec& spec);

// Render a document back to plain text: sentences capitalized and closed
// with a period, paragraphs separated by blank lines. tokenize() on the
// result reproduces the document's positions and spans.
std::string render_text(const Document& doc);

// Write each document to <dir>/<id>.txt, creating the directory.
void write_corpus(const std::filesystem::path& directory,
                  std::span<const NamedDocument> docs);

// CSV with columns concat_id, source_files, n, gold_boundaries; the list
// columns are semicolon-joined.
void write_manifest_csv(std::ostream& out, std::span<const Concatenation> concats);

} // namespace cohesion

#endif
