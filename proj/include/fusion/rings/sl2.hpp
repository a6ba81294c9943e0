#pragma once

#include <cstdint>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

/// Spins of the Clebsch-Gordan decomposition of spin m with spin n:
/// |m-n|, |m-n|+2, ..., m+n, each occurring once.
std::vector<std::int64_t> clebsch_gordan_spins(std::int64_t m, std::int64_t n);

/// Fusion ring of SL(2): labels are non-negative spins, dim(k) = k+1,
/// unit = 0, fusion by the Clebsch-Gordan rule.
class SL2Ring : public Ring {
public:
    SL2Ring() : Ring("sl2", 1) {}

    std::string description() const override;
    Label unit() const override { return Label{0}; }
    void check_label(const Label& l) const override;
    Element fuse(const Label& a, const Label& b) const override;
    std::vector<Label> fuse_support(const Label& a, const Label& b) const override;
    BigInt dim(const Label& l) const override { return l[0] + 1; }
    Label random_label(std::mt19937_64& rng, int magnitude) const override;
};

}  // namespace fusion
