#include "cohesion/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace cohesion {

namespace {

bool is_ascii_alnum(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Non-ASCII bytes count as word characters so UTF-8 words stay intact.
bool is_word_char(unsigned char c) {
    return is_ascii_alnum(c) || c >= 0x80;
}

bool is_space(unsigned char c) {
    return std::isspace(c) != 0;
}

bool is_upper(unsigned char c) {
    return c >= 'A' && c <= 'Z';
}

bool is_terminator(unsigned char c) {
    return c == '.' || c == '!' || c == '?';
}

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// A verbal suffix may only come off when it leaves a pronounceable stem.
bool stem_has_vowel(const std::string& w, std::size_t suffix_len) {
    for (std::size_t i = 0; i + suffix_len < w.size(); ++i)
        if (is_vowel(w[i])) return true;
    return false;
}

void undouble_final_consonant(std::string& w) {
    if (w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2] &&
        is_ascii_alnum(static_cast<unsigned char>(w.back())) && !is_vowel(w.back()))
        w.pop_back();
}

// Blank-line separated byte ranges, each a maximal run of non-blank lines.
std::vector<std::pair<std::size_t, std::size_t>> paragraph_blocks(std::string_view text) {
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    constexpr std::size_t npos = std::string_view::npos;
    std::size_t block_begin = npos;
    std::size_t block_end = 0;
    std::size_t pos = 0;
    for (;;) {
        std::size_t eol = text.find('\n', pos);
        std::size_t line_end = (eol == npos) ? text.size() : eol;
        bool blank = true;
        for (std::size_t k = pos; k < line_end; ++k)
            if (!is_space(static_cast<unsigned char>(text[k]))) {
                blank = false;
                break;
            }
        if (!blank) {
            if (block_begin == npos) block_begin = pos;
            block_end = line_end;
        } else if (block_begin != npos) {
            blocks.emplace_back(block_begin, block_end);
            block_begin = npos;
        }
        if (eol == npos) break;
        pos = eol + 1;
    }
    if (block_begin != npos) blocks.emplace_back(block_begin, block_end);
    return blocks;
}

} // namespace

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

std::string lemmatize(std::string_view surface) {
    std::string w = ascii_lower(surface);
    if (w.size() < 4) return w;
    for (;;) {
        if (w.size() < 4) break;
        if (ends_with(w, "ies")) {
            w.erase(w.size() - 3);
            w.push_back('y');
            continue;
        }
        if (ends_with(w, "es")) {   // keep the stem-final e
            w.pop_back();
            continue;
        }
        if (ends_with(w, "s") && !ends_with(w, "ss")) {
            w.pop_back();
            continue;
        }
        if (ends_with(w, "ing") && stem_has_vowel(w, 3)) {
            w.erase(w.size() - 3);
            undouble_final_consonant(w);
            continue;
        }
        if (ends_with(w, "ed") && stem_has_vowel(w, 2)) {
            w.erase(w.size() - 2);
            undouble_final_consonant(w);
            continue;
        }
        break;
    }
    return w;
}

std::size_t Document::sentence_ordinal(Position p) const {
    // Spans tile 1..n, so the last span starting at or before p holds it.
    auto it = std::upper_bound(sentence_spans.begin(), sentence_spans.end(), p,
                               [](Position pos, const Span& s) { return pos < s.first; });
    if (it == sentence_spans.begin()) throw Error("position before first sentence");
    --it;
    if (p > it->last) throw Error("position outside sentence spans");
    return static_cast<std::size_t>(it - sentence_spans.begin());
}

std::vector<Position> Document::sentence_end_positions() const {
    std::vector<Position> ends;
    ends.reserve(sentence_spans.size());
    for (const Span& s : sentence_spans) ends.push_back(s.last);
    return ends;
}

std::vector<Position> Document::paragraph_end_positions() const {
    std::vector<Position> ends;
    ends.reserve(paragraph_spans.size());
    for (const Span& s : paragraph_spans) ends.push_back(s.last);
    return ends;
}

Document tokenize(std::string_view raw_text) {
    Document doc;
    for (auto [block_begin, block_end] : paragraph_blocks(raw_text)) {
        const Position paragraph_first = doc.tokens.size() + 1;
        Position sentence_first = doc.tokens.size() + 1;

        std::size_t i = block_begin;
        while (i < block_end) {
            unsigned char c = static_cast<unsigned char>(raw_text[i]);
            if (is_word_char(c)) {
                std::size_t start = i;
                ++i;
                while (i < block_end) {
                    unsigned char w = static_cast<unsigned char>(raw_text[i]);
                    if (is_word_char(w)) {
                        ++i;
                    } else if ((w == '\'' || w == '-') && i + 1 < block_end &&
                               is_word_char(static_cast<unsigned char>(raw_text[i + 1]))) {
                        i += 2;
                    } else {
                        break;
                    }
                }
                std::string surface(raw_text.substr(start, i - start));
                Token tok;
                tok.lemma = lemmatize(surface);
                tok.surface = std::move(surface);
                tok.position = doc.tokens.size() + 1;
                doc.tokens.push_back(std::move(tok));
            } else {
                if (is_terminator(c) && doc.tokens.size() + 1 > sentence_first) {
                    // Sentence break when whitespace and an uppercase letter follow.
                    std::size_t j = i + 1;
                    while (j < raw_text.size() && is_space(static_cast<unsigned char>(raw_text[j]))) ++j;
                    if (j > i + 1 && j < raw_text.size() &&
                        is_upper(static_cast<unsigned char>(raw_text[j]))) {
                        doc.sentence_spans.push_back({sentence_first, doc.tokens.size()});
                        sentence_first = doc.tokens.size() + 1;
                    }
                }
                ++i;
            }
        }
        if (doc.tokens.size() + 1 > sentence_first)
            doc.sentence_spans.push_back({sentence_first, doc.tokens.size()});
        if (doc.tokens.size() + 1 > paragraph_first)
            doc.paragraph_spans.push_back({paragraph_first, doc.tokens.size()});
    }
    if (doc.tokens.empty())
        throw EmptyDocumentError("empty document: input contains no words");
    doc.n = doc.tokens.size();
    return doc;
}

Document mark_content(Document doc, const Stoplist& stoplist) {
    for (Token& tok : doc.tokens)
        tok.is_content = !stoplist.contains(tok.surface) && !stoplist.contains(tok.lemma);
    return doc;
}

Stoplist Stoplist::from_stream(std::istream& in) {
    Stoplist list;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        list.add(std::string_view(line).substr(b, e - b + 1));
    }
    return list;
}

Stoplist Stoplist::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stoplist file: " + path.string());
    return from_stream(in);
}

void Stoplist::add(std::string_view word) {
    entries_.insert(ascii_lower(word));
}

bool Stoplist::contains(std::string_view word) const {
    if (entries_.empty()) return false;
    return entries_.count(ascii_lower(word)) > 0;
}

} // namespace cohesion
