#pragma once

#include "fusion/ring.hpp"

namespace fusion {

/// Fusion ring of GL(2): labels (a, k) with spin a >= 0 and determinant
/// power k in Z; dim(a, k) = a+1, unit (0, 0). Fusion combines the
/// Clebsch-Gordan rule on spins with determinant bookkeeping:
///   (a,i) x (b,j) -> {(c, i+j+(a+b-c)/2) : c in CG(a,b)}.
/// The highest weight (l1 >= l2) corresponds to (l1-l2, l2).
class GL2Ring : public Ring {
public:
    GL2Ring() : Ring("gl2", 2) {}

    std::string description() const override;
    Label unit() const override { return Label{0, 0}; }
    void check_label(const Label& l) const override;
    Element fuse(const Label& a, const Label& b) const override;
    std::vector<Label> fuse_support(const Label& a, const Label& b) const override;
    BigInt dim(const Label& l) const override { return l[0] + 1; }
    Label random_label(std::mt19937_64& rng, int magnitude) const override;
};

}  // namespace fusion
