#include "cohesion/dotplot.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "cohesion/error.hpp"

namespace cohesion {

PrefixCounts::PrefixCounts(std::size_t n, std::vector<std::vector<Position>> positions)
    : n_(n), positions_(std::move(positions)), lemma_at_(n + 1, kNoLemma) {
    for (LemmaId id = 0; id < positions_.size(); ++id) {
        for (Position p : positions_[id]) lemma_at_[p] = id;
        content_total_ += positions_[id].size();
    }
}

std::size_t PrefixCounts::count_in(LemmaId id, Position x, Position y) const {
    const auto& pos = positions_[id];
    auto lo = std::upper_bound(pos.begin(), pos.end(), x);
    auto hi = std::upper_bound(pos.begin(), pos.end(), y);
    return static_cast<std::size_t>(hi - lo);
}

std::size_t SparseCounts::total() const {
    std::size_t sum = 0;
    for (const auto& [id, count] : counts) sum += count;
    return sum;
}

std::size_t SparseCounts::at(LemmaId id) const {
    auto it = counts.find(id);
    return it == counts.end() ? 0 : it->second;
}

std::pair<Vocabulary, PrefixCounts> build_index(const Document& doc) {
    Vocabulary vocab;
    std::vector<std::vector<Position>> positions;
    for (const Token& tok : doc.tokens) {
        if (!tok.is_content) continue;
        auto [it, inserted] =
            vocab.lemma_to_id.emplace(tok.lemma, static_cast<LemmaId>(positions.size()));
        if (inserted) positions.emplace_back();
        positions[it->second].push_back(tok.position);
    }
    if (positions.empty())
        throw EmptyIndexError("cannot index a stream with no content tokens");
    return {std::move(vocab), PrefixCounts(doc.n, std::move(positions))};
}

SparseCounts count_vector(const PrefixCounts& index, Position x, Position y) {
    if (x > y) throw SpanError("span start exceeds span end");
    if (y > index.n()) throw SpanError("span end exceeds stream length");
    SparseCounts out;
    for (Position p = x + 1; p <= y; ++p) {
        LemmaId id = index.lemma_at(p);
        if (id != PrefixCounts::kNoLemma) ++out.counts[id];
    }
    return out;
}

std::uint64_t dot(const SparseCounts& a, const SparseCounts& b) {
    const SparseCounts& small = a.counts.size() <= b.counts.size() ? a : b;
    const SparseCounts& large = a.counts.size() <= b.counts.size() ? b : a;
    std::uint64_t sum = 0;
    for (const auto& [id, count] : small.counts)
        sum += static_cast<std::uint64_t>(count) * large.at(id);
    return sum;
}

namespace {

void validate_partition(std::span<const Position> partition, std::size_t n) {
    if (partition.empty())
        throw PartitionError("partition must contain the initial boundary 0");
    if (partition.front() != 0)
        throw PartitionError("partition must start at 0");
    for (std::size_t j = 1; j < partition.size(); ++j) {
        if (partition[j] <= partition[j - 1])
            throw PartitionError("partition entries must be strictly ascending");
        if (partition[j] >= n)
            throw PartitionError("interior boundaries must lie strictly before n");
    }
}

// Same-lemma pair count between (a, b] and the suffix (b, n], exact.
std::uint64_t cross_pairs(const PrefixCounts& index, Position a, Position b,
                          std::vector<std::size_t>& scratch,
                          std::vector<LemmaId>& touched) {
    touched.clear();
    for (Position p = a + 1; p <= b; ++p) {
        LemmaId id = index.lemma_at(p);
        if (id == PrefixCounts::kNoLemma) continue;
        if (scratch[id] == 0) touched.push_back(id);
        ++scratch[id];
    }
    std::uint64_t sum = 0;
    for (LemmaId id : touched) {
        sum += static_cast<std::uint64_t>(scratch[id]) * index.count_in(id, b, index.n());
        scratch[id] = 0;
    }
    return sum;
}

} // namespace

double outside_density(const PrefixCounts& index, std::span<const Position> partition) {
    const std::size_t n = index.n();
    validate_partition(partition, n);
    if (partition.size() == 1) return 0.0;

    std::vector<std::size_t> scratch(index.lemma_count(), 0);
    std::vector<LemmaId> touched;
    double density = 0.0;
    for (std::size_t j = 1; j < partition.size(); ++j) {
        const Position a = partition[j - 1];
        const Position b = partition[j];
        const std::uint64_t pairs = cross_pairs(index, a, b, scratch, touched);
        const std::uint64_t area =
            static_cast<std::uint64_t>(b - a) * static_cast<std::uint64_t>(n - b);
        density += static_cast<double>(pairs) / static_cast<double>(area);
    }
    return density;
}

PointSet dotplot_points(const Document& doc) {
    std::vector<std::vector<Position>> by_lemma;
    {
        std::unordered_map<std::string, std::size_t> ids;
        for (const Token& tok : doc.tokens) {
            if (!tok.is_content) continue;
            auto [it, inserted] = ids.emplace(tok.lemma, by_lemma.size());
            if (inserted) by_lemma.emplace_back();
            by_lemma[it->second].push_back(tok.position);
        }
    }
    PointSet points;
    for (const auto& positions : by_lemma)
        for (Position x : positions)
            for (Position y : positions) points.emplace_back(x, y);
    std::sort(points.begin(), points.end());
    return points;
}

DensityCurve density_curve(const PrefixCounts& index,
                           std::span<const Position> boundaries,
                           std::span<const Position> candidates) {
    DensityCurve curve;
    curve.reserve(candidates.size());
    std::vector<Position> partition;
    for (Position candidate : candidates) {
        partition.assign(boundaries.begin(), boundaries.end());
        partition.insert(std::upper_bound(partition.begin(), partition.end(), candidate),
                         candidate);
        curve.push_back({candidate, outside_density(index, partition)});
    }
    return curve;
}

void write_points_csv(std::ostream& out, const PointSet& points) {
    out << "x,y\n";
    for (const auto& [x, y] : points) out << x << ',' << y << '\n';
}

void write_density_csv(std::ostream& out, const DensityCurve& curve) {
    char buf[64];
    out << "position,density\n";
    for (const auto& [position, density] : curve) {
        std::snprintf(buf, sizeof buf, "%.6f", density);
        out << position << ',' << buf << '\n';
    }
}

void write_dotplot_pgm(std::ostream& out, const PointSet& points, std::size_t n) {
    std::vector<bool> grid(n * n, false);
    for (const auto& [x, y] : points) {
        if (x == 0 || y == 0 || x > n || y > n)
            throw SpanError("point outside the n by n raster");
        grid[(y - 1) * n + (x - 1)] = true;
    }
    out << "P2\n" << n << ' ' << n << "\n1\n";
    // Rows from y = n down to y = 1; lines kept within the 70-column limit.
    std::size_t line_len = 0;
    for (std::size_t row = 0; row < n; ++row) {
        const Position y = n - row;
        for (std::size_t col = 0; col < n; ++col) {
            const char pixel = grid[(y - 1) * n + col] ? '0' : '1';
            if (line_len + 2 > 70) {
                out << '\n';
                line_len = 0;
            } else if (line_len != 0) {
                out << ' ';
                ++line_len;
            }
            out << pixel;
            ++line_len;
        }
    }
    out << '\n';
}

} // namespace cohesion
