#ifndef COHESION_EVALUATION_HPP
#define COHESION_EVALUATION_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohesion/text.hpp"

namespace cohesion {

struct MatchCounts {
    std::size_t exact = 0;
    std::size_t close_raw = 0;      // every hypothesis within the window of an unmatched gold
    std::size_t close_deduped = 0;  // at most one per gold boundary
    std::size_t extra = 0;
    std::size_t missed = 0;
    std::size_t gold_total = 0;
    std::size_t proposed_total = 0;

    friend bool operator==(const MatchCounts&, const MatchCounts&) = default;
};

// Ratios in [0,1]; empty when the corresponding denominator is zero.
struct EvalReport {
    std::optional<double> precision;
    std::optional<double> precision_close;
    std::optional<double> recall;
    std::optional<double> recall_close;
};

// Maps a word position to the ordinal of the sentence containing it.
using SentenceIndexFn = std::function<std::size_t(Position)>;

// Score hypothesized boundaries against gold ones. Exact (position-equal)
// matches are assigned first, one to one. A remaining hypothesis within
// `window_sentences` sentence ordinals of an exact-unmatched gold boundary
// is close; close_deduped admits one hypothesis per gold, nearest first,
// ties toward the earlier hypothesis. Hypotheses near no gold are extra;
// golds left without an exact or deduped close match are missed.
// Both inputs must be strictly ascending (ContractError otherwise).
MatchCounts align(std::span<const Position> hypothesis,
                  std::span<const Position> gold,
                  std::size_t window_sentences,
                  const SentenceIndexFn& sentence_index);

// precision        = exact / proposed_total
// precision_close  = (exact + close_deduped) / proposed_total
// recall           = exact / gold_total
// recall_close     = (exact + close_deduped) / gold_total
EvalReport metrics(const MatchCounts& counts);

// Flat key=value lines; undefined metrics print "n/a", defined ones three
// decimal places.
void write_report(std::ostream& out, const MatchCounts& counts, const EvalReport& report);

struct EvalRow {
    std::string id;
    MatchCounts counts;
    EvalReport report;
};

// Per-row CSV plus a final "mean" row. Undefined metrics print "n/a" and
// stay out of the column mean.
void write_eval_csv(std::ostream& out, std::span<const EvalRow> rows);

} // namespace cohesion

#endif
