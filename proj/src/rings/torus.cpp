#include "fusion/rings/torus.hpp"

#include <algorithm>
#include <cstdlib>

#include "fusion/errors.hpp"

namespace fusion {

TorusRing::TorusRing(int rank) : Ring("torus:" + std::to_string(rank), rank), rank_(rank) {
    if (rank < 1) throw ConfigError("torus rank must be >= 1");
}

std::string TorusRing::description() const {
    return "rank-" + std::to_string(rank_) +
           " torus character ring: integer exponent vectors, dim 1";
}

Label TorusRing::unit() const {
    return Label(std::vector<std::int64_t>(static_cast<std::size_t>(rank_), 0));
}

void TorusRing::check_label(const Label& l) const { require_width(l); }

Element TorusRing::fuse(const Label& a, const Label& b) const {
    Element out(this);
    out.add(fuse_support(a, b).front(), 1);
    return out;
}

std::vector<Label> TorusRing::fuse_support(const Label& a, const Label& b) const {
    check_label(a);
    check_label(b);
    std::vector<std::int64_t> sum(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) sum[static_cast<std::size_t>(i)] = a[i] + b[i];
    return {Label(std::move(sum))};
}

Label TorusRing::random_label(std::mt19937_64& rng, int magnitude) const {
    std::uniform_int_distribution<std::int64_t> coord(-magnitude, magnitude);
    std::vector<std::int64_t> enc(static_cast<std::size_t>(rank_));
    for (auto& v : enc) v = coord(rng);
    return Label(std::move(enc));
}

namespace {

// Level counts of the 1-D reachability walk: counts[m] = number of
// integers first reached by a sum of exactly m scalars from `moves`
// (m = 0 reaches only 0). Walks are confined to |t| <= steps * max|move|.
std::vector<std::int64_t> axis_level_counts(const std::vector<std::int64_t>& moves, int steps) {
    std::int64_t maxabs = 0;
    for (std::int64_t s : moves) maxabs = std::max(maxabs, std::abs(s));
    const std::int64_t bound = maxabs * steps;
    const std::size_t span = static_cast<std::size_t>(2 * bound + 1);

    std::vector<char> reached(span, 0);
    auto index = [bound](std::int64_t t) { return static_cast<std::size_t>(t + bound); };
    reached[index(0)] = 1;

    std::vector<std::int64_t> counts(static_cast<std::size_t>(steps) + 1, 0);
    counts[0] = 1;
    std::vector<std::int64_t> frontier{0};
    for (int m = 1; m <= steps && !frontier.empty(); ++m) {
        std::vector<std::int64_t> next;
        for (std::int64_t p : frontier) {
            for (std::int64_t s : moves) {
                const std::int64_t t = p + s;
                if (std::abs(t) > bound) continue;
                if (!reached[index(t)]) {
                    reached[index(t)] = 1;
                    next.push_back(t);
                }
            }
        }
        counts[static_cast<std::size_t>(m)] = static_cast<std::int64_t>(next.size());
        frontier = std::move(next);
    }
    return counts;
}

}  // namespace

std::optional<GrowthCounts> TorusRing::try_count_growth(const SupportSet& generators,
                                                        int steps) const {
    // axis-supported generators only: every non-zero generator must have
    // exactly one non-zero coordinate
    std::vector<std::vector<std::int64_t>> axis_moves(static_cast<std::size_t>(rank_));
    std::int64_t maxabs = 0;
    for (const Label& g : generators) {
        int hot = -1;
        for (int i = 0; i < rank_; ++i) {
            if (g[static_cast<std::size_t>(i)] != 0) {
                if (hot >= 0) return std::nullopt;
                hot = i;
            }
        }
        if (hot >= 0) {
            const std::int64_t s = g[static_cast<std::size_t>(hot)];
            axis_moves[static_cast<std::size_t>(hot)].push_back(s);
            maxabs = std::max(maxabs, std::abs(s));
        }
    }
    // keep the per-axis walk arrays reasonable
    if (maxabs * static_cast<std::int64_t>(steps) > (std::int64_t{1} << 24)) {
        return std::nullopt;
    }

    // counts of points whose minimal step count is exactly m, as the
    // convolution of the per-axis level counts
    std::vector<BigInt> level(static_cast<std::size_t>(steps) + 1, 0);
    level[0] = 1;
    for (int axis = 0; axis < rank_; ++axis) {
        const auto axis_counts = axis_level_counts(axis_moves[static_cast<std::size_t>(axis)],
                                                   steps);
        std::vector<BigInt> merged(static_cast<std::size_t>(steps) + 1, 0);
        for (std::size_t m = 0; m <= static_cast<std::size_t>(steps); ++m) {
            if (level[m] == 0) continue;
            for (std::size_t j = 0; j + m <= static_cast<std::size_t>(steps); ++j) {
                if (axis_counts[j] != 0) merged[m + j] += level[m] * axis_counts[j];
            }
        }
        level = std::move(merged);
    }

    GrowthCounts out;
    out.support_sizes.reserve(static_cast<std::size_t>(steps));
    out.dims.reserve(static_cast<std::size_t>(steps));
    BigInt cumulative = level[0];
    for (int n = 1; n <= steps; ++n) {
        cumulative += level[static_cast<std::size_t>(n)];
        out.support_sizes.push_back(cumulative);
        out.dims.push_back(cumulative);  // every dim is 1
    }
    return out;
}

}  // namespace fusion
