#pragma once

#include <vector>

#include "fusion/bigint.hpp"
#include "fusion/element.hpp"
#include "fusion/ring.hpp"
#include "fusion/support.hpp"

namespace fusion {

/// Pointwise sum of multiplicity maps. Throws RingMismatchError unless
/// both elements belong to `ring`.
Element add_elements(const Ring& ring, const Element& x, const Element& y);

/// Bilinear extension of the basis fusion oracle, with exact
/// multiplicities. Validation-scale only: iterated products can have
/// exponentially large coefficient sums.
Element fuse_elements(const Ring& ring, const Element& x, const Element& y);

/// Support-only product: the union of support(fuse(a,b)) over a in A,
/// b in B. Multiplicities are never formed.
SupportSet fuse_support(const Ring& ring, const SupportSet& a, const SupportSet& b);

/// F_1 = F, F_{n+1} = fuse_support(F_n, F), returned for n = 1..steps.
/// Requires the unit label to be a member of F (callers adjoin it; see
/// growth_series). With the unit present the sequence is monotone under
/// inclusion. Materializes every set; intended for moderate sizes.
std::vector<SupportSet> power_support_sequence(const Ring& ring, const SupportSet& f,
                                               int steps);

/// Sum of squared dimensions over a support set, exact.
BigInt dim_vn(const Ring& ring, const SupportSet& support);

/// Element of a single basis label with multiplicity 1.
Element basis_element(const Ring& ring, const Label& l);

}  // namespace fusion
