#include "fusion/element.hpp"

#include <algorithm>

namespace fusion {

Element Element::from_terms(const Ring* ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Element out(ring);
    for (auto& [label, mult] : terms) {
        if (mult == 0) continue;
        if (!out.terms_.empty() && out.terms_.back().first == label) {
            out.terms_.back().second += mult;
        } else {
            out.terms_.emplace_back(std::move(label), std::move(mult));
        }
    }
    return out;
}

BigInt Element::multiplicity(const Label& l) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), l,
                               [](const Term& t, const Label& key) { return t.first < key; });
    if (it != terms_.end() && it->first == l) return it->second;
    return 0;
}

void Element::add(const Label& l, const BigInt& mult) {
    if (mult == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), l,
                               [](const Term& t, const Label& key) { return t.first < key; });
    if (it != terms_.end() && it->first == l) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {l, mult});
    }
}

std::vector<Label> Element::support() const {
    std::vector<Label> out;
    out.reserve(terms_.size());
    for (const auto& [label, mult] : terms_) out.push_back(label);
    return out;
}

BigInt Element::length() const {
    BigInt total = 0;
    for (const auto& [label, mult] : terms_) total += mult;
    return total;
}

}  // namespace fusion
