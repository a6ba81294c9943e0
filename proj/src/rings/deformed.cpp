#include "fusion/rings/deformed.hpp"

#include "fusion/errors.hpp"
#include "fusion/rings/gl2.hpp"
#include "fusion/rings/sl2.hpp"

namespace fusion {

std::vector<BigInt> qint_dims(std::int64_t d, int K) {
    if (d < 2) {
        throw ConfigError("deformation parameter must be an integer >= 2 "
                          "(smaller values make the dimension function non-positive)");
    }
    std::vector<BigInt> u;
    u.reserve(static_cast<std::size_t>(K) + 1);
    u.emplace_back(1);
    if (K >= 1) u.emplace_back(d);
    for (int k = 2; k <= K; ++k) {
        u.push_back(d * u[static_cast<std::size_t>(k - 1)] - u[static_cast<std::size_t>(k - 2)]);
    }
    return u;
}

namespace {

const BigInt& cached_qint(std::mutex& mu, std::vector<BigInt>& dims, std::int64_t d,
                          std::int64_t k) {
    std::scoped_lock lock(mu);
    if (static_cast<std::size_t>(k) >= dims.size()) {
        std::size_t old = dims.size();
        dims.resize(static_cast<std::size_t>(k) + 1);
        for (std::size_t i = old; i <= static_cast<std::size_t>(k); ++i) {
            dims[i] = i == 0 ? BigInt(1) : i == 1 ? BigInt(d) : d * dims[i - 1] - dims[i - 2];
        }
    }
    return dims[static_cast<std::size_t>(k)];
}

}  // namespace

DeformedSL2Ring::DeformedSL2Ring(std::int64_t d) : Ring("be:" + std::to_string(d), 1), d_(d) {
    if (d < 2) {
        throw ConfigError("be:<d> requires an integer d >= 2");
    }
}

std::string DeformedSL2Ring::description() const {
    return "SL(2) fusion with quantum-integer dims, fundamental dim " + std::to_string(d_);
}

void DeformedSL2Ring::check_label(const Label& l) const {
    require_width(l);
    if (l[0] < 0) bad_label(l, "spin must be non-negative");
}

Element DeformedSL2Ring::fuse(const Label& a, const Label& b) const {
    check_label(a);
    check_label(b);
    Element out(this);
    for (std::int64_t k : clebsch_gordan_spins(a[0], b[0])) out.add(Label{k}, 1);
    return out;
}

std::vector<Label> DeformedSL2Ring::fuse_support(const Label& a, const Label& b) const {
    check_label(a);
    check_label(b);
    std::vector<Label> out;
    for (std::int64_t k : clebsch_gordan_spins(a[0], b[0])) out.push_back(Label{k});
    return out;
}

BigInt DeformedSL2Ring::dim(const Label& l) const {
    check_label(l);
    return cached_qint(mu_, dims_, d_, l[0]);
}

Label DeformedSL2Ring::random_label(std::mt19937_64& rng, int magnitude) const {
    std::uniform_int_distribution<std::int64_t> spin(0, magnitude);
    return Label{spin(rng)};
}

DeformedGL2Ring::DeformedGL2Ring(std::int64_t d) : Ring("gef:" + std::to_string(d), 2), d_(d) {
    if (d < 2) {
        throw ConfigError("gef:<d> requires an integer d >= 2");
    }
}

std::string DeformedGL2Ring::description() const {
    return "GL(2) fusion with quantum-integer dims, fundamental dim " + std::to_string(d_);
}

void DeformedGL2Ring::check_label(const Label& l) const {
    require_width(l);
    if (l[0] < 0) bad_label(l, "spin must be non-negative");
}

Element DeformedGL2Ring::fuse(const Label& x, const Label& y) const {
    Element out(this);
    for (Label& l : fuse_support(x, y)) out.add(l, 1);
    return out;
}

std::vector<Label> DeformedGL2Ring::fuse_support(const Label& x, const Label& y) const {
    check_label(x);
    check_label(y);
    const std::int64_t a = x[0], i = x[1];
    const std::int64_t b = y[0], j = y[1];
    std::vector<Label> out;
    for (std::int64_t c : clebsch_gordan_spins(a, b)) {
        out.push_back(Label{c, i + j + (a + b - c) / 2});
    }
    return out;
}

BigInt DeformedGL2Ring::dim(const Label& l) const {
    check_label(l);
    return cached_qint(mu_, dims_, d_, l[0]);
}

Label DeformedGL2Ring::random_label(std::mt19937_64& rng, int magnitude) const {
    std::uniform_int_distribution<std::int64_t> spin(0, magnitude);
    std::uniform_int_distribution<std::int64_t> det(-magnitude, magnitude);
    return Label{spin(rng), det(rng)};
}

}  // namespace fusion
