#ifndef COHESION_SEGMENTER_HPP
#define COHESION_SEGMENTER_HPP

#include <optional>
#include <span>
#include <vector>

#include "cohesion/dotplot.hpp"
#include "cohesion/text.hpp"

namespace cohesion {

enum class Granularity { Sentence, Paragraph };

// Sorted boundary positions, seeded with 0. No member may reach n.
struct BoundarySet {
    std::vector<Position> positions{0};

    bool contains(Position p) const;
    void insert(Position p);   // keeps the ascending order
};

// A boundary set plus one trial candidate, the argument to outside_density.
using Partition = std::vector<Position>;

Partition make_partition(const BoundarySet& boundaries, Position candidate);

struct SegmenterConfig {
    Granularity granularity = Granularity::Sentence;
    // Empty means unlimited; then stop_on_increase must be set.
    std::optional<std::size_t> max_boundaries;
    bool stop_on_increase = true;
    std::size_t min_separation_words = 100;

    void validate() const;   // throws ConfigError
};

struct InsertionStep {
    Position position = 0;
    double density = 0.0;   // objective value after this insertion
};

struct SegmentationResult {
    std::vector<Position> boundaries;   // ascending, initial 0 excluded
    std::vector<InsertionStep> trace;   // in insertion order
};

// Interior sentence-end (or paragraph-end) positions, ascending; the final
// position n is never a candidate.
std::vector<Position> candidate_positions(const Document& doc, Granularity granularity);

// Evaluate every candidate not in `boundaries` whose distance to each
// existing boundary and to n is at least min_separation_words, and return
// the one whose insertion minimizes outside density. Ties go to the
// smallest position. Empty when no candidate is eligible.
std::optional<InsertionStep> insert_best_boundary(const PrefixCounts& index,
                                                  const BoundarySet& boundaries,
                                                  std::span<const Position> candidates,
                                                  std::size_t min_separation_words);

// Greedy segmentation: repeatedly insert the density-minimizing boundary.
// The first insertion is unconditional; afterwards, when stop_on_increase
// is set, the loop stops before an insertion whose density strictly
// exceeds the previous accepted one. Also stops at max_boundaries or when
// no candidate remains eligible.
SegmentationResult segment(const PrefixCounts& index, const Document& doc,
                           const SegmenterConfig& config);

// One word position per line, ascending. The annotated form appends the
// 1-based sentence ordinal and the post-insertion density, tab-separated.
void write_boundaries(std::ostream& out, const SegmentationResult& result,
                      const Document& doc, bool annotate);

} // namespace cohesion

#endif
