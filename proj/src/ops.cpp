#include "fusion/ops.hpp"

#include <unordered_set>

#include "fusion/errors.hpp"

namespace fusion {

namespace {

void require_same_ring(const Ring& ring, const Element& x, const char* who) {
    if (x.ring() != &ring) {
        throw RingMismatchError(std::string(who) + ": element does not belong to ring " +
                                ring.id());
    }
}

void require_same_ring(const Ring& ring, const SupportSet& s, const char* who) {
    if (s.ring() != &ring) {
        throw RingMismatchError(std::string(who) + ": support set does not belong to ring " +
                                ring.id());
    }
}

}  // namespace

Element add_elements(const Ring& ring, const Element& x, const Element& y) {
    require_same_ring(ring, x, "add_elements");
    require_same_ring(ring, y, "add_elements");
    Element out = x;
    for (const auto& [label, mult] : y.terms()) out.add(label, mult);
    return out;
}

Element fuse_elements(const Ring& ring, const Element& x, const Element& y) {
    require_same_ring(ring, x, "fuse_elements");
    require_same_ring(ring, y, "fuse_elements");
    Element out(&ring);
    for (const auto& [a, ma] : x.terms()) {
        for (const auto& [b, mb] : y.terms()) {
            const BigInt coeff = ma * mb;
            const Element product = ring.fuse(a, b);
            for (const auto& [c, mc] : product.terms()) {
                out.add(c, coeff * mc);
            }
        }
    }
    return out;
}

SupportSet fuse_support(const Ring& ring, const SupportSet& a, const SupportSet& b) {
    require_same_ring(ring, a, "fuse_support");
    require_same_ring(ring, b, "fuse_support");
    std::unordered_set<Label, LabelHash> seen;
    std::vector<Label> out;
    for (const Label& x : a) {
        for (const Label& y : b) {
            for (Label& c : ring.fuse_support(x, y)) {
                if (seen.insert(c).second) out.push_back(std::move(c));
            }
        }
    }
    return SupportSet::of(&ring, std::move(out));
}

std::vector<SupportSet> power_support_sequence(const Ring& ring, const SupportSet& f,
                                               int steps) {
    require_same_ring(ring, f, "power_support_sequence");
    if (f.empty()) throw ConfigError("power_support_sequence: empty generator set");
    if (steps < 1) throw ConfigError("power_support_sequence: steps must be >= 1");
    for (const Label& l : f) ring.check_label(l);
    SupportSet start = f;
    start.insert(ring.unit());  // keeps F_n monotone under inclusion

    std::vector<SupportSet> out;
    out.reserve(static_cast<std::size_t>(steps));
    out.push_back(start);
    for (int n = 1; n < steps; ++n) {
        out.push_back(fuse_support(ring, out.back(), start));
    }
    return out;
}

BigInt dim_vn(const Ring& ring, const SupportSet& support) {
    require_same_ring(ring, support, "dim_vn");
    BigInt total = 0;
    for (const Label& l : support) {
        const BigInt d = ring.dim(l);
        total += d * d;
    }
    return total;
}

Element basis_element(const Ring& ring, const Label& l) {
    ring.check_label(l);
    Element out(&ring);
    out.add(l, 1);
    return out;
}

}  // namespace fusion
