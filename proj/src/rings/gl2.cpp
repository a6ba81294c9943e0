#include "fusion/rings/gl2.hpp"

#include "fusion/errors.hpp"
#include "fusion/rings/sl2.hpp"

namespace fusion {

std::string GL2Ring::description() const {
    return "GL(2) fusion ring: labels (spin, det power), dim spin+1";
}

void GL2Ring::check_label(const Label& l) const {
    require_width(l);
    if (l[0] < 0) bad_label(l, "spin must be non-negative");
}

std::vector<Label> GL2Ring::fuse_support(const Label& x, const Label& y) const {
    check_label(x);
    check_label(y);
    const std::int64_t a = x[0], i = x[1];
    const std::int64_t b = y[0], j = y[1];
    std::vector<Label> out;
    for (std::int64_t c : clebsch_gordan_spins(a, b)) {
        // a+b-c is even by the Clebsch-Gordan parity rule
        out.push_back(Label{c, i + j + (a + b - c) / 2});
    }
    return out;
}

Element GL2Ring::fuse(const Label& x, const Label& y) const {
    Element out(this);
    for (Label& l : fuse_support(x, y)) out.add(l, 1);
    return out;
}

Label GL2Ring::random_label(std::mt19937_64& rng, int magnitude) const {
    std::uniform_int_distribution<std::int64_t> spin(0, magnitude);
    std::uniform_int_distribution<std::int64_t> det(-magnitude, magnitude);
    return Label{spin(rng), det(rng)};
}

}  // namespace fusion
