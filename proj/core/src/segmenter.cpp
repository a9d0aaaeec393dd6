#include "cohesion/segmenter.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "cohesion/error.hpp"

namespace cohesion {

bool BoundarySet::contains(Position p) const {
    return std::binary_search(positions.begin(), positions.end(), p);
}

void BoundarySet::insert(Position p) {
    positions.insert(std::upper_bound(positions.begin(), positions.end(), p), p);
}

Partition make_partition(const BoundarySet& boundaries, Position candidate) {
    Partition partition = boundaries.positions;
    partition.insert(std::upper_bound(partition.begin(), partition.end(), candidate),
                     candidate);
    return partition;
}

void SegmenterConfig::validate() const {
    if (!max_boundaries && !stop_on_increase)
        throw ConfigError("segmenter needs a boundary budget or the increase stop");
    if (max_boundaries && *max_boundaries == 0)
        throw ConfigError("max_boundaries must be positive when set");
}

std::vector<Position> candidate_positions(const Document& doc, Granularity granularity) {
    std::vector<Position> ends = granularity == Granularity::Sentence
                                     ? doc.sentence_end_positions()
                                     : doc.paragraph_end_positions();
    while (!ends.empty() && ends.back() >= doc.n) ends.pop_back();
    return ends;
}

std::optional<InsertionStep> insert_best_boundary(const PrefixCounts& index,
                                                  const BoundarySet& boundaries,
                                                  std::span<const Position> candidates,
                                                  std::size_t min_separation_words) {
    const std::size_t n = index.n();
    std::optional<InsertionStep> best;
    for (Position candidate : candidates) {
        if (boundaries.contains(candidate)) continue;
        if (n - candidate < min_separation_words) continue;
        bool eligible = true;
        for (Position b : boundaries.positions) {
            const std::size_t gap = candidate > b ? candidate - b : b - candidate;
            if (gap < min_separation_words) {
                eligible = false;
                break;
            }
        }
        if (!eligible) continue;
        const double density = outside_density(index, make_partition(boundaries, candidate));
        if (!best || density < best->density) best = InsertionStep{candidate, density};
    }
    return best;
}

SegmentationResult segment(const PrefixCounts& index, const Document& doc,
                           const SegmenterConfig& config) {
    config.validate();
    const std::vector<Position> candidates = candidate_positions(doc, config.granularity);

    BoundarySet boundaries;
    SegmentationResult result;
    for (;;) {
        if (config.max_boundaries && result.trace.size() >= *config.max_boundaries) break;
        auto best = insert_best_boundary(index, boundaries, candidates,
                                         config.min_separation_words);
        if (!best) break;
        if (config.stop_on_increase && !result.trace.empty() &&
            best->density > result.trace.back().density)
            break;
        boundaries.insert(best->position);
        result.trace.push_back(*best);
    }

    result.boundaries.assign(boundaries.positions.begin() + 1, boundaries.positions.end());
    return result;
}

void write_boundaries(std::ostream& out, const SegmentationResult& result,
                      const Document& doc, bool annotate) {
    char buf[64];
    for (Position b : result.boundaries) {
        if (!annotate) {
            out << b << '\n';
            continue;
        }
        double density = 0.0;
        for (const InsertionStep& step : result.trace)
            if (step.position == b) {
                density = step.density;
                break;
            }
        std::snprintf(buf, sizeof buf, "%.6f", density);
        out << b << '\t' << doc.sentence_ordinal(b) + 1 << '\t' << buf << '\n';
    }
}

} // namespace cohesion
