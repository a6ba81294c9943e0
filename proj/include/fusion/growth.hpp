#pragma once

#include <string>
#include <vector>

#include "fusion/bigint.hpp"
#include "fusion/ring.hpp"
#include "fusion/support.hpp"

namespace fusion {

struct GrowthRecord {
    int n = 0;
    BigInt support_size;  // |F_n|
    BigInt dim;           // dim V^n = sum of squared dims over F_n
    double log2_dim = 0.0;

    bool operator==(const GrowthRecord&) const = default;
};

struct GrowthSeries {
    std::string ring_id;
    SupportSet generators;  // after unit adjunction
    bool unit_adjoined = false;
    std::vector<GrowthRecord> records;
};

struct GrowthOptions {
    int threads = 1;
    bool strict_unit = false;
};

/// Computes (n, |F_n|, dim V^n) for n = 1..steps, where F_1 is the
/// generator set and F_{n+1} = fuse_support(F_n, F_1). The unit label is
/// adjoined when missing (error instead under strict_unit; the series
/// flags the adjunction). Frontier expansion is incremental: only labels
/// first reached at step n are fused against the generators at step n+1,
/// so each (label, generator) pair is fused exactly once. Results are
/// identical for any thread count.
GrowthSeries growth_series(const Ring& ring, const SupportSet& generators, int steps,
                           const GrowthOptions& opts = {});

}  // namespace fusion
