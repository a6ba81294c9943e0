#include "fusion/growth.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "fusion/errors.hpp"

namespace fusion {

namespace {

GrowthRecord make_record(int n, BigInt support_size, BigInt dim) {
    GrowthRecord rec;
    rec.n = n;
    rec.support_size = std::move(support_size);
    rec.dim = std::move(dim);
    rec.log2_dim = log2_of(rec.dim);
    return rec;
}

// One frontier-expansion pass: fuse every boundary label against every
// generator. Boundary chunks may run on worker threads; the shared
// reached-set is only probed, never mutated, during the pass.
std::vector<Label> expand_boundary(const Ring& ring, const std::vector<Label>& boundary,
                                   const SupportSet& gens,
                                   const std::unordered_set<Label, LabelHash>& reached,
                                   int threads) {
    auto expand_chunk = [&](std::size_t begin, std::size_t end, std::vector<Label>& out) {
        for (std::size_t i = begin; i < end; ++i) {
            for (const Label& g : gens) {
                for (Label& c : ring.fuse_support(boundary[i], g)) {
                    if (!reached.contains(c)) out.push_back(std::move(c));
                }
            }
        }
    };

    if (threads <= 1 || boundary.size() < 1024) {
        std::vector<Label> out;
        expand_chunk(0, boundary.size(), out);
        return out;
    }

    const std::size_t nchunks = static_cast<std::size_t>(threads);
    std::vector<std::vector<Label>> results(nchunks);
    std::vector<std::thread> workers;
    workers.reserve(nchunks);
    const std::size_t chunk = (boundary.size() + nchunks - 1) / nchunks;
    for (std::size_t c = 0; c < nchunks; ++c) {
        const std::size_t begin = std::min(c * chunk, boundary.size());
        const std::size_t end = std::min(begin + chunk, boundary.size());
        workers.emplace_back(expand_chunk, begin, end, std::ref(results[c]));
    }
    for (auto& w : workers) w.join();

    std::vector<Label> out;
    for (auto& part : results) {
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace

GrowthSeries growth_series(const Ring& ring, const SupportSet& generators, int steps,
                           const GrowthOptions& opts) {
    if (generators.empty()) throw ConfigError("growth_series: empty generator set");
    if (generators.ring() != &ring) {
        throw RingMismatchError("growth_series: generator set does not belong to ring " +
                                ring.id());
    }
    if (steps < 1) throw ConfigError("growth_series: steps must be >= 1");
    for (const Label& l : generators) ring.check_label(l);

    GrowthSeries series;
    series.ring_id = ring.id();
    series.generators = generators;
    if (!generators.contains(ring.unit())) {
        if (opts.strict_unit) {
            throw ConfigError("generator set omits the unit label of " + ring.id() +
                              " (strict unit mode)");
        }
        series.generators.insert(ring.unit());
        series.unit_adjoined = true;
    }
    const SupportSet& gens = series.generators;
    series.records.reserve(static_cast<std::size_t>(steps));

    if (auto counted = ring.try_count_growth(gens, steps)) {
        for (int n = 1; n <= steps; ++n) {
            const std::size_t i = static_cast<std::size_t>(n - 1);
            series.records.push_back(
                make_record(n, std::move(counted->support_sizes[i]), std::move(counted->dims[i])));
        }
        return series;
    }

    std::unordered_set<Label, LabelHash> reached(gens.begin(), gens.end());
    std::vector<Label> boundary(gens.begin(), gens.end());
    BigInt dim_acc = 0;
    for (const Label& l : gens) {
        const BigInt d = ring.dim(l);
        dim_acc += d * d;
    }
    series.records.push_back(make_record(1, BigInt(reached.size()), dim_acc));

    for (int n = 2; n <= steps; ++n) {
        std::vector<Label> candidates =
            expand_boundary(ring, boundary, gens, reached, opts.threads);
        std::vector<Label> fresh;
        for (Label& c : candidates) {
            if (reached.insert(c).second) {
                const BigInt d = ring.dim(c);
                dim_acc += d * d;
                fresh.push_back(std::move(c));
            }
        }
        std::sort(fresh.begin(), fresh.end());
        boundary = std::move(fresh);
        series.records.push_back(make_record(n, BigInt(reached.size()), dim_acc));
    }
    return series;
}

}  // namespace fusion
