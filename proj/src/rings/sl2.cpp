#include "fusion/rings/sl2.hpp"

#include <algorithm>

#include "fusion/errors.hpp"

namespace fusion {

std::vector<std::int64_t> clebsch_gordan_spins(std::int64_t m, std::int64_t n) {
    std::vector<std::int64_t> out;
    const std::int64_t lo = std::abs(m - n);
    const std::int64_t hi = m + n;
    out.reserve(static_cast<std::size_t>((hi - lo) / 2 + 1));
    for (std::int64_t k = lo; k <= hi; k += 2) out.push_back(k);
    return out;
}

std::string SL2Ring::description() const {
    return "SL(2) fusion ring: spins k >= 0, dim k+1, Clebsch-Gordan rule";
}

void SL2Ring::check_label(const Label& l) const {
    require_width(l);
    if (l[0] < 0) bad_label(l, "spin must be non-negative");
}

Element SL2Ring::fuse(const Label& a, const Label& b) const {
    check_label(a);
    check_label(b);
    Element out(this);
    for (std::int64_t k : clebsch_gordan_spins(a[0], b[0])) out.add(Label{k}, 1);
    return out;
}

std::vector<Label> SL2Ring::fuse_support(const Label& a, const Label& b) const {
    check_label(a);
    check_label(b);
    std::vector<Label> out;
    for (std::int64_t k : clebsch_gordan_spins(a[0], b[0])) out.push_back(Label{k});
    return out;
}

Label SL2Ring::random_label(std::mt19937_64& rng, int magnitude) const {
    std::uniform_int_distribution<std::int64_t> spin(0, magnitude);
    return Label{spin(rng)};
}

}  // namespace fusion
