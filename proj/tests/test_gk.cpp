#include <doctest.h>

#include <cmath>

#include "fusion/catalog.hpp"
#include "fusion/errors.hpp"
#include "fusion/gk.hpp"
#include "fusion/growth.hpp"
#include "fusion/ops.hpp"

using namespace fusion;

namespace {

GrowthSeries synthetic(const std::vector<BigInt>& dims) {
    GrowthSeries s;
    s.ring_id = "synthetic";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        GrowthRecord r;
        r.n = static_cast<int>(i) + 1;
        r.support_size = 1;
        r.dim = dims[i];
        r.log2_dim = log2_of(r.dim);
        s.records.push_back(std::move(r));
    }
    return s;
}

SupportSet gens_of(const Ring& ring, std::initializer_list<const char*> texts) {
    std::vector<Label> labels;
    for (const char* t : texts) labels.push_back(ring.parse_label(t));
    return SupportSet::of(&ring, std::move(labels));
}

}  // namespace

TEST_CASE("exact cubic growth classifies as polynomial of degree 3") {
    std::vector<BigInt> dims;
    for (int n = 1; n <= 64; ++n) dims.push_back(BigInt(n) * n * n);
    const GKEstimate est = estimate_gkdim(synthetic(dims));
    CHECK(est.classification == GrowthClass::Polynomial);
    CHECK(est.degree == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("exact geometric growth classifies as exponential with rate 1") {
    std::vector<BigInt> dims;
    for (int n = 1; n <= 64; ++n) dims.push_back(BigInt(1) << n);
    const GKEstimate est = estimate_gkdim(synthetic(dims));
    CHECK(est.classification == GrowthClass::Exponential);
    CHECK(est.rate == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("constant series has degree zero") {
    std::vector<BigInt> dims(32, BigInt(6));
    const GKEstimate est = estimate_gkdim(synthetic(dims));
    CHECK(est.classification == GrowthClass::Polynomial);
    CHECK(est.degree == 0.0);
}

TEST_CASE("a growth collapse is reported inconclusive") {
    // fast geometric start, then near-flat: doubling exponents disagree
    // and window rates decrease
    std::vector<BigInt> dims;
    for (int n = 1; n <= 32; ++n) dims.push_back(BigInt(1) << n);
    for (int n = 33; n <= 64; ++n) dims.push_back((BigInt(1) << 32) + n);
    const GKEstimate est = estimate_gkdim(synthetic(dims));
    CHECK(est.classification == GrowthClass::Inconclusive);
}

TEST_CASE("series length is validated") {
    std::vector<BigInt> dims(8, BigInt(1));
    CHECK_THROWS_AS(estimate_gkdim(synthetic(dims)), ConfigError);
    dims.assign(20, BigInt(1));
    CHECK_THROWS_AS(estimate_gkdim(synthetic(dims)), ConfigError);

    // records must cover every n
    auto sl2 = make_ring("sl2");
    GrowthSeries s = growth_series(*sl2, gens_of(*sl2, {"0", "1"}), 16);
    s.records.erase(s.records.begin() + 3);
    s.records.push_back(s.records.back());
    CHECK_THROWS_AS(estimate_gkdim(s), ConfigError);
}

TEST_CASE("sl2 growth is cubic") {
    auto sl2 = make_ring("sl2");
    const GKEstimate est =
        estimate_gkdim(growth_series(*sl2, gens_of(*sl2, {"0", "1"}), 128));
    CHECK(est.classification == GrowthClass::Polynomial);
    CHECK(est.degree == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("deformed ring with d=2 gives the same estimate as sl2") {
    auto sl2 = make_ring("sl2");
    auto be2 = make_ring("be:2");
    const GrowthSeries a = growth_series(*sl2, gens_of(*sl2, {"0", "1"}), 64);
    const GrowthSeries b = growth_series(*be2, gens_of(*be2, {"0", "1"}), 64);
    CHECK(a.records == b.records);
    const GKEstimate ea = estimate_gkdim(a);
    const GKEstimate eb = estimate_gkdim(b);
    CHECK(ea.classification == eb.classification);
    CHECK(ea.degree == eb.degree);
    CHECK(ea.doubling_exponents == eb.doubling_exponents);
}

TEST_CASE("deformed rings grow exponentially with the predicted tail rate") {
    for (std::int64_t d : {3, 4}) {
        CAPTURE(d);
        auto ring = make_ring("be:" + std::to_string(d));
        const GrowthSeries s = growth_series(*ring, gens_of(*ring, {"0", "1"}), 64);
        const GKEstimate est = estimate_gkdim(s);
        CHECK(est.classification == GrowthClass::Exponential);
        // u_k ~ q^k with q + 1/q = d; the squared term dominates
        const double q = (static_cast<double>(d) +
                          std::sqrt(static_cast<double>(d * d - 4))) / 2.0;
        CHECK(est.rate == doctest::Approx(2.0 * std::log2(q)).epsilon(0.02));
        // witness-backed lower bound: rate >= 2 log2(rho) - 0.1 with rho = d/2
        CHECK(est.rate >= 2.0 * std::log2(static_cast<double>(d) / 2.0) - 0.1);
    }
}

TEST_CASE("doubling exponents of polynomial rings converge") {
    auto sl2 = make_ring("sl2");
    const GKEstimate est =
        estimate_gkdim(growth_series(*sl2, gens_of(*sl2, {"0", "1"}), 512));
    const auto& e = est.doubling_exponents;  // k = 2..9
    REQUIRE(e.size() >= 5);
    for (std::size_t i = 3; i + 1 < e.size(); ++i) {
        // successive differences shrink strictly beyond k = 4
        CHECK(std::abs(e[i + 1] - e[i]) < std::abs(e[i] - e[i - 1]));
    }
}

TEST_CASE("gkdim estimate invariants") {
    auto t2 = make_ring("torus:2");
    const GKEstimate est = estimate_gkdim(
        growth_series(*t2, gens_of(*t2, {"(0,0)", "(1,0)", "(-1,0)", "(0,1)", "(0,-1)"}), 64));
    CHECK(est.classification == GrowthClass::Polynomial);
    CHECK(est.degree >= 0.0);
    CHECK(est.degree == doctest::Approx(2.0).epsilon(0.1));
    CHECK(est.doubling_exponents.size() == 5);  // k = 2..6
}
