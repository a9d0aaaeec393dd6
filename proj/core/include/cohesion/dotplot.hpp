#ifndef COHESION_DOTPLOT_HPP
#define COHESION_DOTPLOT_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cohesion/text.hpp"

namespace cohesion {

using LemmaId = std::uint32_t;

// Dense ids for the content lemmas of one stream, in first-appearance order.
struct Vocabulary {
    std::unordered_map<std::string, LemmaId> lemma_to_id;

    std::size_t size() const { return lemma_to_id.size(); }   // m
};

// Occurrence-position index over the content tokens of a stream: for each
// lemma id, the ascending word positions at which it occurs. Immutable
// once built; queries are read-only.
class PrefixCounts {
public:
    static constexpr LemmaId kNoLemma = static_cast<LemmaId>(-1);

    PrefixCounts() = default;
    PrefixCounts(std::size_t n, std::vector<std::vector<Position>> positions);

    std::size_t n() const { return n_; }
    std::size_t lemma_count() const { return positions_.size(); }
    std::size_t content_total() const { return content_total_; }

    std::span<const Position> positions(LemmaId id) const { return positions_[id]; }

    // Lemma at word position p, or kNoLemma for filtered positions.
    LemmaId lemma_at(Position p) const { return lemma_at_[p]; }

    // Occurrences of `id` within the half-open span (x, y].
    std::size_t count_in(LemmaId id, Position x, Position y) const;

private:
    std::size_t n_ = 0;
    std::size_t content_total_ = 0;
    std::vector<std::vector<Position>> positions_;
    std::vector<LemmaId> lemma_at_;   // size n+1, index 0 unused
};

// Lemma counts over one span. Zero entries are absent.
struct SparseCounts {
    std::unordered_map<LemmaId, std::size_t> counts;

    std::size_t total() const;
    std::size_t at(LemmaId id) const;   // 0 when absent
};

using Point = std::pair<Position, Position>;
using PointSet = std::vector<Point>;

struct DensityPoint {
    Position position = 0;
    double density = 0.0;
};
using DensityCurve = std::vector<DensityPoint>;

// Index the content tokens of a filtered, lemmatized stream.
// Throws EmptyIndexError when the stream has no content tokens.
std::pair<Vocabulary, PrefixCounts> build_index(const Document& doc);

// Counts of each lemma over word positions x+1..y. Throws SpanError when
// x > y or y > n.
SparseCounts count_vector(const PrefixCounts& index, Position x, Position y);

// Exact integer dot product of two count vectors.
std::uint64_t dot(const SparseCounts& a, const SparseCounts& b);

// The density of repetition mass falling outside the diagonal squares
// induced by `partition`: for each consecutive boundary pair (a, b], the
// number of same-lemma pairs crossing into the suffix (b, n], normalized
// by the enclosing rectangle area, summed over segments. A partition must
// be strictly ascending, start at 0 and keep interior entries below n.
// A lone {0} yields 0.
double outside_density(const PrefixCounts& index, std::span<const Position> partition);

// All ordered pairs of positions holding the same content lemma,
// including self pairs; sorted by (x, y).
PointSet dotplot_points(const Document& doc);

// outside_density of boundaries+{candidate} for every candidate.
DensityCurve density_curve(const PrefixCounts& index,
                           std::span<const Position> boundaries,
                           std::span<const Position> candidates);

// CSV: header "x,y", one point per line, sorted by (x,y).
void write_points_csv(std::ostream& out, const PointSet& points);

// CSV: header "position,density", densities with 6 decimal places.
void write_density_csv(std::ostream& out, const DensityCurve& curve);

// Plain PGM (P2), n by n, maxval 1. A black pixel (0) marks a point.
// Raster rows run top to bottom from y = n down to y = 1; columns left to
// right from x = 1, so the repetition diagonal rises like a plotted line.
void write_dotplot_pgm(std::ostream& out, const PointSet& points, std::size_t n);

} // namespace cohesion

#endif
