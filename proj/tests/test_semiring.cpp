#include <doctest.h>

#include <random>

#include "fusion/catalog.hpp"
#include "fusion/errors.hpp"
#include "fusion/ops.hpp"
#include "fusion/rings/sl2.hpp"
#include "fusion/rings/torus.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

Element elem(const Ring& ring, std::initializer_list<std::pair<Label, std::int64_t>> terms) {
    Element out(&ring);
    for (const auto& [l, m] : terms) out.add(l, m);
    return out;
}

}  // namespace

TEST_CASE("add_elements is pointwise addition") {
    SL2Ring sl2;
    const Label a{1}, b{2};

    CHECK(add_elements(sl2, elem(sl2, {{a, 1}}), elem(sl2, {{a, 2}, {b, 1}})) ==
          elem(sl2, {{a, 3}, {b, 1}}));
    CHECK(add_elements(sl2, Element(&sl2), elem(sl2, {{b, 1}})) == elem(sl2, {{b, 1}}));
    CHECK(add_elements(sl2, elem(sl2, {{a, 1}}), elem(sl2, {{b, 1}})) ==
          elem(sl2, {{a, 1}, {b, 1}}));
}

TEST_CASE("element ops reject foreign rings") {
    SL2Ring sl2;
    TorusRing torus(1);
    const Element x = elem(sl2, {{Label{1}, 1}});
    const Element y = elem(torus, {{Label{1}, 1}});
    CHECK_THROWS_AS(add_elements(sl2, x, y), RingMismatchError);
    CHECK_THROWS_AS(fuse_elements(sl2, x, y), RingMismatchError);
    CHECK_THROWS_AS(dim_vn(torus, SupportSet::of(&sl2, {Label{0}})), RingMismatchError);
}

TEST_CASE("elements never store zero multiplicities") {
    SL2Ring sl2;
    Element x(&sl2);
    x.add(Label{3}, 0);
    CHECK(x.empty());
    x.add(Label{3}, 2);
    x.add(Label{3}, -2);
    CHECK(x.empty());
}

TEST_CASE("fuse_elements matches the character oracle on sl2") {
    SL2Ring sl2;
    CHECK(fuse_elements(sl2, elem(sl2, {{Label{1}, 1}}), elem(sl2, {{Label{1}, 1}})) ==
          elem(sl2, {{Label{0}, 1}, {Label{2}, 1}}));
    CHECK(fuse_elements(sl2, elem(sl2, {{Label{2}, 1}}), elem(sl2, {{Label{3}, 1}})) ==
          elem(sl2, {{Label{1}, 1}, {Label{3}, 1}, {Label{5}, 1}}));
    // dimension check 3*4 = 2+4+6
    CHECK(sl2.dim(Label{2}) * sl2.dim(Label{3}) ==
          sl2.dim(Label{1}) + sl2.dim(Label{3}) + sl2.dim(Label{5}));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> spin(0, 24);
    for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t m = spin(rng), n = spin(rng);
        Element want(&sl2);
        for (const auto& [k, mult] : oracles::sl2_character_product(m, n)) {
            want.add(Label{k}, mult);
        }
        CHECK(sl2.fuse(Label{m}, Label{n}) == want);
    }
}

TEST_CASE("fuse_elements: unit law and bilinearity") {
    SL2Ring sl2;
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Label a = sl2.random_label(rng, 12);
        const Label b = sl2.random_label(rng, 12);
        const Element unit = elem(sl2, {{sl2.unit(), 1}});
        const Element x = elem(sl2, {{a, 2}, {b, 1}});
        CHECK(fuse_elements(sl2, unit, x) == x);
        CHECK(fuse_elements(sl2, x, unit) == x);

        // (2a) * b == 2 (a*b)
        const Element lhs = fuse_elements(sl2, elem(sl2, {{a, 2}}), elem(sl2, {{b, 1}}));
        Element rhs(&sl2);
        const Element ab = sl2.fuse(a, b);
        for (const auto& [c, m] : ab.terms()) rhs.add(c, 2 * m);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("fuse_support on sets") {
    SL2Ring sl2;
    const SupportSet f01 = SupportSet::of(&sl2, {Label{0}, Label{1}});
    CHECK(fuse_support(sl2, f01, f01) == SupportSet::of(&sl2, {Label{0}, Label{1}, Label{2}}));

    TorusRing t1(1);
    const SupportSet pm = SupportSet::of(&t1, {Label{1}, Label{-1}});
    CHECK(fuse_support(t1, pm, pm) == SupportSet::of(&t1, {Label{-2}, Label{0}, Label{2}}));

    const SupportSet unit_only = SupportSet::of(&t1, {t1.unit()});
    CHECK(fuse_support(t1, unit_only, pm) == pm);
}

TEST_CASE("power_support_sequence basics") {
    SL2Ring sl2;
    const auto seq = power_support_sequence(sl2, SupportSet::of(&sl2, {Label{0}, Label{1}}), 3);
    REQUIRE(seq.size() == 3);
    CHECK(seq[2] == SupportSet::of(&sl2, {Label{0}, Label{1}, Label{2}, Label{3}}));

    const auto unit_seq = power_support_sequence(sl2, SupportSet::of(&sl2, {sl2.unit()}), 5);
    for (const auto& s : unit_seq) CHECK(s == SupportSet::of(&sl2, {sl2.unit()}));

    TorusRing t1(1);
    const auto ball = power_support_sequence(
        t1, SupportSet::of(&t1, {Label{0}, Label{1}, Label{-1}}), 4);
    for (int n = 1; n <= 4; ++n) {
        std::vector<Label> expect;
        for (std::int64_t v = -n; v <= n; ++v) expect.push_back(Label{v});
        CHECK(ball[static_cast<std::size_t>(n - 1)] == SupportSet::of(&t1, std::move(expect)));
    }

    CHECK_THROWS_AS(power_support_sequence(sl2, SupportSet(&sl2), 3), ConfigError);
}

TEST_CASE("power_support_sequence is monotone and deterministic") {
    auto gl2 = make_ring("gl2");
    const SupportSet gens = SupportSet::of(
        gl2.get(), {Label{0, 0}, Label{1, 0}, Label{0, 1}, Label{0, -1}});
    const auto seq1 = power_support_sequence(*gl2, gens, 8);
    const auto seq2 = power_support_sequence(*gl2, gens, 8);
    for (std::size_t i = 0; i < seq1.size(); ++i) {
        CHECK(seq1[i] == seq2[i]);
        if (i > 0) CHECK(seq1[i - 1].subset_of(seq1[i]));
    }
}

TEST_CASE("dim_vn sums squared dimensions") {
    SL2Ring sl2;
    CHECK(dim_vn(sl2, SupportSet::of(&sl2, {Label{0}, Label{1}, Label{2}})) == 14);
    CHECK(dim_vn(sl2, SupportSet::of(&sl2, {sl2.unit()})) == 1);
    CHECK(dim_vn(sl2, SupportSet::of(&sl2, {Label{0}, Label{1}, Label{2}, Label{3}})) == 30);
}

TEST_CASE("support of fuse_elements agrees with fuse_support") {
    std::mt19937_64 rng(23);
    for (const char* id : {"sl2", "gl2", "torus:2", "sln:3", "be:3", "product:sl2,torus:1"}) {
        auto ring = make_ring(id);
        for (int trial = 0; trial < 25; ++trial) {
            const Label a = ring->random_label(rng, 4);
            const Label b = ring->random_label(rng, 4);
            const Element ab = fuse_elements(*ring, basis_element(*ring, a),
                                             basis_element(*ring, b));
            const SupportSet via_support =
                fuse_support(*ring, SupportSet::of(ring.get(), {a}),
                             SupportSet::of(ring.get(), {b}));
            CHECK(SupportSet::of(ring.get(), ab.support()) == via_support);
        }
    }
}

TEST_CASE("sub-multiplicativity of growth") {
    std::mt19937_64 rng(31);
    for (const char* id : {"sl2", "gl2", "torus:2", "be:3"}) {
        auto ring = make_ring(id);
        std::vector<Label> gens{ring->unit()};
        for (int i = 0; i < 3; ++i) gens.push_back(ring->random_label(rng, 2));
        const auto seq = power_support_sequence(*ring, SupportSet::of(ring.get(), gens), 8);
        for (int m = 1; m <= 4; ++m) {
            for (int n = 1; m + n <= 8; ++n) {
                const BigInt lhs = dim_vn(*ring, seq[static_cast<std::size_t>(m + n - 1)]);
                const BigInt rhs = dim_vn(*ring, seq[static_cast<std::size_t>(m - 1)]) *
                                   dim_vn(*ring, seq[static_cast<std::size_t>(n - 1)]);
                CHECK(lhs <= rhs);
            }
        }
    }
}
