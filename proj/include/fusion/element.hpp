#pragma once

#include <utility>
#include <vector>

#include "fusion/bigint.hpp"
#include "fusion/label.hpp"

namespace fusion {

class Ring;

/// Finite formal non-negative-integer combination of labels. Stored as a
/// vector of (label, multiplicity) terms sorted by label; multiplicities
/// are strictly positive, zero terms are never stored.
class Element {
public:
    using Term = std::pair<Label, BigInt>;

    Element() = default;
    explicit Element(const Ring* ring) : ring_(ring) {}

    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    static Element from_terms(const Ring* ring, std::vector<Term> terms);

    const Ring* ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    BigInt multiplicity(const Label& l) const;
    void add(const Label& l, const BigInt& mult);

    std::vector<Label> support() const;

    /// Sum of multiplicities (the number of simple summands with count).
    BigInt length() const;

    bool operator==(const Element& other) const {
        return terms_ == other.terms_;
    }

private:
    const Ring* ring_ = nullptr;
    std::vector<Term> terms_;
};

}  // namespace fusion
