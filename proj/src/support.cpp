#include "fusion/support.hpp"

#include <algorithm>

namespace fusion {

SupportSet SupportSet::of(const Ring* ring, std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    SupportSet out(ring);
    out.labels_ = std::move(labels);
    return out;
}

bool SupportSet::contains(const Label& l) const {
    return std::binary_search(labels_.begin(), labels_.end(), l);
}

bool SupportSet::insert(const Label& l) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it != labels_.end() && *it == l) return false;
    labels_.insert(it, l);
    return true;
}

bool SupportSet::subset_of(const SupportSet& other) const {
    return std::includes(other.labels_.begin(), other.labels_.end(),
                         labels_.begin(), labels_.end());
}

}  // namespace fusion
