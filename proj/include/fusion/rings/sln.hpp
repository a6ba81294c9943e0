#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

using Partition = std::vector<std::int64_t>;

/// Weyl dimension formula for GL(n)/SL(n) highest weights:
/// prod_{1<=i<j<=n} (p_i - p_j + j - i) / (j - i), exact.
/// `p` may have fewer than n parts; missing parts are zero.
BigInt weyl_dim(const Partition& p, int n);

/// Littlewood-Richardson expansion of s_lambda * s_mu restricted to at
/// most n rows: list of (nu, c^nu_{lambda,mu}) with nu NOT yet reduced
/// modulo full columns. Enumerates LR skew tableaux (horizontal strips
/// per mu-row under the ballot condition).
std::vector<std::pair<Partition, std::int64_t>> lr_expand(const Partition& lambda,
                                                          const Partition& mu, int n);

/// Vertical-strip Pieri rule: the expansion of s_lambda * e_k over at
/// most n rows, multiplicity-free. Fast path for fusing against a
/// fundamental weight (a single column of k boxes).
std::vector<Partition> pieri_column_expand(const Partition& lambda, int k, int n);

/// Fusion ring of SL(n): labels are partitions with at most n-1 parts
/// (stored with exactly n-1 entries, trailing zeros), fusion by the
/// Littlewood-Richardson rule followed by removal of full columns,
/// dimensions by the Weyl formula.
class SLnRing : public Ring {
public:
    explicit SLnRing(int n);

    int rank_n() const { return n_; }
    std::string description() const override;
    Label unit() const override;
    void check_label(const Label& l) const override;
    Element fuse(const Label& a, const Label& b) const override;
    BigInt dim(const Label& l) const override;
    Label random_label(std::mt19937_64& rng, int magnitude) const override;

    /// Top-level parses allow omitted trailing zero parts.
    Label parse_label(std::string_view text) const override;

private:
    int n_;
};

}  // namespace fusion
