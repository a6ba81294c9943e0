#pragma once

#include <vector>

#include "fusion/label.hpp"

namespace fusion {

class Ring;

/// Finite set of labels with deterministic (sorted) iteration order.
class SupportSet {
public:
    SupportSet() = default;
    explicit SupportSet(const Ring* ring) : ring_(ring) {}

    /// Sorts and deduplicates.
    static SupportSet of(const Ring* ring, std::vector<Label> labels);

    const Ring* ring() const { return ring_; }
    const std::vector<Label>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }

    bool contains(const Label& l) const;
    /// Inserts keeping sorted order; returns true if newly added.
    bool insert(const Label& l);

    bool subset_of(const SupportSet& other) const;

    auto begin() const { return labels_.begin(); }
    auto end() const { return labels_.end(); }

    bool operator==(const SupportSet& other) const {
        return labels_ == other.labels_;
    }

private:
    const Ring* ring_ = nullptr;
    std::vector<Label> labels_;
};

}  // namespace fusion
