#include "cohesion/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "cohesion/error.hpp"

namespace cohesion {

namespace {

void require_strictly_ascending(std::span<const Position> values, const char* what) {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1])
            throw ContractError(std::string(what) + " boundaries must be sorted and unique");
}

std::string format_metric(const std::optional<double>& value) {
    if (!value) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *value);
    return buf;
}

} // namespace

MatchCounts align(std::span<const Position> hypothesis,
                  std::span<const Position> gold,
                  std::size_t window_sentences,
                  const SentenceIndexFn& sentence_index) {
    require_strictly_ascending(hypothesis, "hypothesis");
    require_strictly_ascending(gold, "gold");

    MatchCounts counts;
    counts.gold_total = gold.size();
    counts.proposed_total = hypothesis.size();

    // Exact matches first, one to one by position equality.
    std::vector<Position> exact_positions, hyp_rest, gold_rest;
    std::set_intersection(hypothesis.begin(), hypothesis.end(), gold.begin(), gold.end(),
                          std::back_inserter(exact_positions));
    counts.exact = exact_positions.size();
    std::set_difference(hypothesis.begin(), hypothesis.end(), gold.begin(), gold.end(),
                        std::back_inserter(hyp_rest));
    std::set_difference(gold.begin(), gold.end(), hypothesis.begin(), hypothesis.end(),
                        std::back_inserter(gold_rest));

    // Candidate close pairs between the leftovers, by sentence distance.
    struct ClosePair {
        std::size_t distance;
        std::size_t hyp_idx;
        std::size_t gold_idx;
    };
    std::vector<ClosePair> pairs;
    std::vector<bool> hyp_is_close(hyp_rest.size(), false);
    for (std::size_t h = 0; h < hyp_rest.size(); ++h) {
        const std::size_t hs = sentence_index(hyp_rest[h]);
        for (std::size_t g = 0; g < gold_rest.size(); ++g) {
            const std::size_t gs = sentence_index(gold_rest[g]);
            const std::size_t distance = hs > gs ? hs - gs : gs - hs;
            if (distance <= window_sentences) {
                pairs.push_back({distance, h, g});
                hyp_is_close[h] = true;
            }
        }
    }
    counts.close_raw = static_cast<std::size_t>(
        std::count(hyp_is_close.begin(), hyp_is_close.end(), true));
    counts.extra = hyp_rest.size() - counts.close_raw;

    // One close match per gold boundary: nearest first, ties toward the
    // earlier hypothesis.
    std::stable_sort(pairs.begin(), pairs.end(), [](const ClosePair& a, const ClosePair& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        if (a.hyp_idx != b.hyp_idx) return a.hyp_idx < b.hyp_idx;
        return a.gold_idx < b.gold_idx;
    });
    std::vector<bool> hyp_used(hyp_rest.size(), false), gold_used(gold_rest.size(), false);
    for (const ClosePair& pair : pairs) {
        if (hyp_used[pair.hyp_idx] || gold_used[pair.gold_idx]) continue;
        hyp_used[pair.hyp_idx] = true;
        gold_used[pair.gold_idx] = true;
        ++counts.close_deduped;
    }
    counts.missed = gold_rest.size() - counts.close_deduped;
    return counts;
}

EvalReport metrics(const MatchCounts& counts) {
    EvalReport report;
    if (counts.proposed_total > 0) {
        const double proposed = static_cast<double>(counts.proposed_total);
        report.precision = static_cast<double>(counts.exact) / proposed;
        report.precision_close =
            static_cast<double>(counts.exact + counts.close_deduped) / proposed;
    }
    if (counts.gold_total > 0) {
        const double gold = static_cast<double>(counts.gold_total);
        report.recall = static_cast<double>(counts.exact) / gold;
        report.recall_close =
            static_cast<double>(counts.exact + counts.close_deduped) / gold;
    }
    return report;
}

void write_report(std::ostream& out, const MatchCounts& counts, const EvalReport& report) {
    out << "exact=" << counts.exact << '\n'
        << "close_raw=" << counts.close_raw << '\n'
        << "close_deduped=" << counts.close_deduped << '\n'
        << "extra=" << counts.extra << '\n'
        << "missed=" << counts.missed << '\n'
        << "precision=" << format_metric(report.precision) << '\n'
        << "precision_close=" << format_metric(report.precision_close) << '\n'
        << "recall=" << format_metric(report.recall) << '\n'
        << "recall_close=" << format_metric(report.recall_close) << '\n';
}

void write_eval_csv(std::ostream& out, std::span<const EvalRow> rows) {
    out << "id,exact,close_raw,close_deduped,extra,missed,gold_total,proposed_total,"
           "precision,precision_close,recall,recall_close\n";

    struct Mean {
        double sum = 0.0;
        std::size_t count = 0;

        void add(const std::optional<double>& v) {
            if (v) {
                sum += *v;
                ++count;
            }
        }
        std::optional<double> value() const {
            if (count == 0) return std::nullopt;
            return sum / static_cast<double>(count);
        }
    };
    Mean precision, precision_close, recall, recall_close;
    double counts_sum[7] = {};

    for (const EvalRow& row : rows) {
        const MatchCounts& c = row.counts;
        out << row.id << ',' << c.exact << ',' << c.close_raw << ',' << c.close_deduped
            << ',' << c.extra << ',' << c.missed << ',' << c.gold_total << ','
            << c.proposed_total << ',' << format_metric(row.report.precision) << ','
            << format_metric(row.report.precision_close) << ','
            << format_metric(row.report.recall) << ','
            << format_metric(row.report.recall_close) << '\n';
        const std::size_t fields[7] = {c.exact,  c.close_raw,  c.close_deduped, c.extra,
                                       c.missed, c.gold_total, c.proposed_total};
        for (int i = 0; i < 7; ++i) counts_sum[i] += static_cast<double>(fields[i]);
        precision.add(row.report.precision);
        precision_close.add(row.report.precision_close);
        recall.add(row.report.recall);
        recall_close.add(row.report.recall_close);
    }

    if (rows.empty()) return;
    char buf[32];
    out << "mean";
    for (double sum : counts_sum) {
        std::snprintf(buf, sizeof buf, "%.3f", sum / static_cast<double>(rows.size()));
        out << ',' << buf;
    }
    out << ',' << format_metric(precision.value()) << ','
        << format_metric(precision_close.value()) << ',' << format_metric(recall.value())
        << ',' << format_metric(recall_close.value()) << '\n';
}

} // namespace cohesion
