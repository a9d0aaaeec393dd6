#include "cohesion/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "cohesion/error.hpp"

namespace cohesion {

namespace {

// Bounded draw with rejection sampling; mt19937_64 output is specified
// bit-exactly, so sequences reproduce across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

std::size_t uniform_in(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(uniform_below(rng, hi - lo + 1));
}

void append_document(Document& stream, const Document& doc) {
    const Position offset = stream.n;
    for (const Token& tok : doc.tokens) {
        Token shifted = tok;
        shifted.position += offset;
        stream.tokens.push_back(std::move(shifted));
    }
    for (const Span& s : doc.sentence_spans)
        stream.sentence_spans.push_back({s.first + offset, s.last + offset});
    for (const Span& s : doc.paragraph_spans)
        stream.paragraph_spans.push_back({s.first + offset, s.last + offset});
    stream.n += doc.n;
}

} // namespace

std::vector<NamedDocument> load_corpus(const std::filesystem::path& directory) {
    if (!std::filesystem::is_directory(directory))
        throw IoError("corpus directory not found: " + directory.string());

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(directory))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    if (files.empty())
        throw IoError("corpus directory holds no .txt files: " + directory.string());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

    std::vector<NamedDocument> docs;
    docs.reserve(files.size());
    for (const auto& path : files) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot read corpus file: " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        try {
            docs.push_back({path.filename().string(), tokenize(buffer.str())});
        } catch (const EmptyDocumentError&) {
            throw IoError("corpus file holds no words: " + path.string());
        }
    }
    return docs;
}

Concatenation merge(std::span<const NamedDocument> docs) {
    if (docs.empty()) throw ConfigError("cannot merge an empty document list");
    Concatenation concat;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        append_document(concat.stream, docs[i].doc);
        concat.source_ids.push_back(docs[i].id);
        if (i + 1 < docs.size()) concat.gold_boundaries.push_back(concat.stream.n);
    }
    concat.n = concat.stream.n;
    return concat;
}

std::vector<Concatenation> concatenate(std::span<const NamedDocument> docs,
                                       std::size_t count,
                                       std::uint64_t seed,
                                       std::pair<std::size_t, std::size_t> k_range) {
    auto [k_lo, k_hi] = k_range;
    if (k_lo < 1 || k_lo > k_hi) throw ConfigError("invalid k range");
    if (k_hi > docs.size())
        throw ConfigError("k range exceeds the available document count");

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> indices(docs.size());
    std::vector<Concatenation> concats;
    concats.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        const std::size_t k = uniform_in(rng, k_lo, k_hi);
        // Partial Fisher-Yates: k distinct indices per concatenation.
        std::iota(indices.begin(), indices.end(), std::size_t{0});
        std::vector<NamedDocument> members;
        members.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t pick = j + uniform_below(rng, indices.size() - j);
            std::swap(indices[j], indices[pick]);
            members.push_back(docs[indices[j]]);
        }
        concats.push_back(merge(members));
    }
    return concats;
}

void SynthSpec::validate() const {
    if (documents == 0) throw ConfigError("documents must be positive");
    if (vocabulary_size == 0) throw ConfigError("vocabulary_size must be positive");
    if (words_per_doc.first == 0 || words_per_doc.first > words_per_doc.second)
        throw ConfigError("invalid words_per_doc range");
    if (sentence_words.first == 0 || sentence_words.first > sentence_words.second)
        throw ConfigError("invalid sentence_words range");
    if (sentences_per_paragraph.first == 0 ||
        sentences_per_paragraph.first > sentences_per_paragraph.second)
        throw ConfigError("invalid sentences_per_paragraph range");
    if (topic_skew < 0.0 || topic_skew > 1.0)
        throw ConfigError("topic_skew must lie in [0, 1]");
    if (topic_skew > 0.0 && vocabulary_size < documents)
        throw ConfigError("vocabulary too small for one topic block per document");
}

std::vector<NamedDocument> synthesize(const SynthSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);

    // Disjoint topic blocks of equal size; the remainder joins no block
    // but stays in the shared pool.
    const std::size_t block =
        spec.topic_skew > 0.0 ? spec.vocabulary_size / spec.documents : 0;

    std::vector<NamedDocument> docs;
    docs.reserve(spec.documents);
    for (std::size_t d = 0; d < spec.documents; ++d) {
        const std::size_t words =
            uniform_in(rng, spec.words_per_doc.first, spec.words_per_doc.second);

        Document doc;
        doc.n = words;
        std::size_t emitted = 0;
        std::size_t paragraph_first = 1;
        std::size_t sentences_left =
            uniform_in(rng, spec.sentences_per_paragraph.first,
                       spec.sentences_per_paragraph.second);
        while (emitted < words) {
            const std::size_t len =
                std::min(words - emitted,
                         uniform_in(rng, spec.sentence_words.first, spec.sentence_words.second));
            const Position first = emitted + 1;
            for (std::size_t w = 0; w < len; ++w) {
                std::size_t word_id;
                const bool topical =
                    block > 0 &&
                    static_cast<double>(uniform_below(rng, 1u << 24)) /
                            static_cast<double>(1u << 24) <
                        spec.topic_skew;
                if (topical)
                    word_id = d * block + uniform_below(rng, block);
                else
                    word_id = uniform_below(rng, spec.vocabulary_size);
                Token tok;
                tok.surface = "w" + std::to_string(word_id);
                tok.lemma = tok.surface;
                tok.position = ++emitted;
                doc.tokens.push_back(std::move(tok));
            }
            doc.sentence_spans.push_back({first, emitted});
            if (--sentences_left == 0 || emitted == words) {
                doc.paragraph_spans.push_back({paragraph_first, emitted});
                paragraph_first = emitted + 1;
                sentences_left = uniform_in(rng, spec.sentences_per_paragraph.first,
                                            spec.sentences_per_paragraph.second);
            }
        }
        char name[32];
        std::snprintf(name, sizeof name, "synth-%04zu", d);
        docs.push_back({name, std::move(doc)});
    }
    return docs;
}

std::string render_text(const Document& doc) {
    std::string out;
    std::size_t sentence = 0;
    for (const Span& para : doc.paragraph_spans) {
        if (!out.empty()) out += "\n\n";
        bool first_in_para = true;
        while (sentence < doc.sentence_spans.size() &&
               doc.sentence_spans[sentence].last <= para.last) {
            const Span& s = doc.sentence_spans[sentence];
            if (!first_in_para) out += ' ';
            for (Position p = s.first; p <= s.last; ++p) {
                std::string word = doc.tokens[p - 1].surface;
                if (p == s.first && !word.empty() && word[0] >= 'a' && word[0] <= 'z')
                    word[0] = static_cast<char>(word[0] - 'a' + 'A');
                out += word;
                if (p != s.last) out += ' ';
            }
            out += '.';
            first_in_para = false;
            ++sentence;
        }
    }
    out += '\n';
    return out;
}

void write_corpus(const std::filesystem::path& directory,
                  std::span<const NamedDocument> docs) {
    std::filesystem::create_directories(directory);
    for (const NamedDocument& named : docs) {
        const auto path = directory / (named.id + ".txt");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write corpus file: " + path.string());
        out << render_text(named.doc);
    }
}

void write_manifest_csv(std::ostream& out, std::span<const Concatenation> concats) {
    out << "concat_id,source_files,n,gold_boundaries\n";
    for (std::size_t i = 0; i < concats.size(); ++i) {
        const Concatenation& c = concats[i];
        out << i << ',';
        for (std::size_t j = 0; j < c.source_ids.size(); ++j)
            out << (j ? ";" : "") << c.source_ids[j];
        out << ',' << c.n << ',';
        for (std::size_t j = 0; j < c.gold_boundaries.size(); ++j)
            out << (j ? ";" : "") << c.gold_boundaries[j];
        out << '\n';
    }
}

} // namespace cohesion
