#ifndef COHESION_TEXT_HPP
#define COHESION_TEXT_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cohesion/error.hpp"

namespace cohesion {

// 1-based index into the original word stream. Punctuation occupies no
// position; filtered words keep theirs.
using Position = std::size_t;

struct Token {
    std::string surface;
    std::string lemma;       // lowercase; equals lowercased surface unless a rule fired
    Position position = 0;   // 1-based
    bool is_content = true;

    friend bool operator==(const Token&, const Token&) = default;
};

// Inclusive word-position range.
struct Span {
    Position first = 0;
    Position last = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

struct Document {
    std::vector<Token> tokens;
    std::vector<Span> sentence_spans;    // tile 1..n in order
    std::vector<Span> paragraph_spans;   // each ends on a sentence end
    std::size_t n = 0;                   // == tokens.size()

    // 0-based ordinal of the sentence containing word position p.
    std::size_t sentence_ordinal(Position p) const;

    // Last word position of every sentence / paragraph, ascending.
    std::vector<Position> sentence_end_positions() const;
    std::vector<Position> paragraph_end_positions() const;

    friend bool operator==(const Document&, const Document&) = default;
};

class Stoplist {
public:
    Stoplist() = default;

    // Built-in list: ~150 function words plus every inflection of BE and
    // HAVE. See stoplist_default.cpp.
    static Stoplist defaults();

    // One word per line, '#' starts a comment, blank lines ignored. UTF-8.
    static Stoplist from_file(const std::filesystem::path& path);
    static Stoplist from_stream(std::istream& in);

    void add(std::string_view word);
    bool contains(std::string_view word) const;   // case-insensitive
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::unordered_set<std::string> entries_;
};

// Lowercase ASCII letters in place; bytes outside A-Z pass through.
std::string ascii_lower(std::string_view s);

// Split raw text into positioned words with sentence and paragraph spans.
// Words are maximal alphanumeric runs, apostrophes and hyphens included
// when flanked by word characters. Sentences end at . ! ? followed by
// whitespace and an uppercase letter, at paragraph breaks and at end of
// input. Paragraphs are separated by blank lines.
// Throws EmptyDocumentError when the input holds no words.
Document tokenize(std::string_view raw_text);

// Flag tokens whose lowercased surface or lemma is on the stoplist as
// non-content. Token count and positions are preserved.
Document mark_content(Document doc, const Stoplist& stoplist);

// Rule-based lemmatizer: lowercases, then strips inflectional suffixes
// (ies->y, es->e, s, ing, ed; the verbal rules undouble a final doubled
// consonant) until no rule applies. Words shorter than four characters
// are only lowercased. Idempotent by construction.
std::string lemmatize(std::string_view surface);

} // namespace cohesion

#endif
