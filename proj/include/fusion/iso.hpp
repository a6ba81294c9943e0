#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "fusion/element.hpp"
#include "fusion/ring.hpp"

namespace fusion {

/// Partial bijection between label sets of two rings, given on
/// generators and extended by matching fusion decompositions.
struct IsoMap {
    std::map<Label, Label> forward;
};

enum class IsoStatus {
    Verified,   // compatible on every pair checked to the requested depth
    Violation,  // fusion images or dimensions fail to match
    Ambiguous,  // two candidate targets are indistinguishable locally
};

struct IsoCheckResult {
    IsoStatus status = IsoStatus::Verified;
    IsoMap map;  // as far as the extension got
    int depth_reached = 0;
    std::string detail;  // witness description for violation/ambiguity
    std::vector<Label> discovery_order;  // mapped domain labels, oldest first
};

/// Breadth-first extension of gen_map by fusing already-mapped labels,
/// requiring fusion images to match as elements under the map and
/// dimensions to agree on every mapped label. An ambiguous extension
/// (two candidate targets with equal multiplicity, dimension, and no
/// distinguishing mapped term) is reported distinctly from a violation.
IsoCheckResult check_measured_iso(const Ring& a, const Ring& b, const IsoMap& gen_map,
                                  int depth);

/// Same extension without the dimension requirement: a plain semiring
/// compatibility check, used to transport classes for the witness test.
IsoCheckResult extend_semiring_map(const Ring& a, const Ring& b, const IsoMap& gen_map,
                                   int depth);

struct WitnessCertificate {
    Element witness;   // class X in ring A
    BigInt dim_x;      // dim X
    BigInt dim_fx;     // dim f(X)
    double ratio;      // dim X / dim f(X), strictly > 1
    std::string bound; // "dim S_n >= rho^n" with rho spelled exactly
};

/// Certifies super-polynomial growth: if dim X > dim f(X) under a
/// fusion-compatible map f, every n admits a simple constituent S_n of
/// X^{tensor n} with dim S_n >= (dim X / dim f(X))^n. Returns nullopt
/// when dim X <= dim f(X). Throws Error when the map cannot be extended
/// over the support of X within `depth` steps.
std::optional<WitnessCertificate> infinite_growth_witness(const Ring& a, const Ring& b,
                                                          const IsoMap& gen_map,
                                                          const Element& x, int depth);

/// Convenience scan: extends the map to `depth` and returns a
/// certificate for the first mapped label (in canonical order) whose
/// dimension strictly exceeds its image's. nullopt if dimensions agree
/// everywhere reached.
std::optional<WitnessCertificate> scan_growth_witness(const Ring& a, const Ring& b,
                                                      const IsoMap& gen_map, int depth);

}  // namespace fusion
