#pragma once

#include "fusion/ring.hpp"

namespace fusion {

/// Character ring of a rank-r torus: labels are integer exponent vectors,
/// fusion is vector addition, every dimension is 1.
class TorusRing : public Ring {
public:
    explicit TorusRing(int rank);

    int rank() const { return rank_; }
    std::string description() const override;
    Label unit() const override;
    void check_label(const Label& l) const override;
    Element fuse(const Label& a, const Label& b) const override;
    std::vector<Label> fuse_support(const Label& a, const Label& b) const override;
    BigInt dim(const Label&) const override { return 1; }
    Label random_label(std::mt19937_64& rng, int magnitude) const override;

    /// Counts |F_n| directly when every generator moves a single
    /// coordinate (the zero vector is allowed). The step count needed to
    /// reach a point then splits as a sum over coordinates, so the level
    /// counts are a convolution of per-axis level counts. Mixed-axis
    /// generator sets return nullopt and go through plain enumeration.
    std::optional<GrowthCounts> try_count_growth(const SupportSet& generators,
                                                 int steps) const override;

private:
    int rank_;
};

}  // namespace fusion
