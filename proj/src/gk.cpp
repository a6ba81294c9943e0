#include "fusion/gk.hpp"

#include <algorithm>
#include <cmath>

#include "fusion/errors.hpp"

namespace fusion {

std::string to_string(GrowthClass c) {
    switch (c) {
        case GrowthClass::Polynomial: return "polynomial";
        case GrowthClass::Exponential: return "exponential";
        case GrowthClass::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

constexpr double kExpRateThreshold = 0.05;  // bits per step
constexpr double kPolyConvergence = 0.1;    // |e_K - e_{K-1}| bound
// Slack for the non-decreasing-rate comparison. Geometric dim sequences
// carry polynomial subleading terms that inflate early window rates by
// O(n q^-2n); from N = 64 on that inflation sits below this slack, while
// polynomial series decay their window rates by ~degree/N, far above it.
constexpr double kMonotoneSlack = 1e-6;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

GKEstimate estimate_gkdim(const GrowthSeries& series) {
    const auto& rec = series.records;
    const std::size_t n_max = rec.size();
    if (n_max < 16 || !is_power_of_two(n_max)) {
        throw ConfigError("estimate_gkdim: series too short; need n = 1..N with N a power of "
                          "two, N >= 16 (got " + std::to_string(n_max) + ")");
    }
    for (std::size_t i = 0; i < n_max; ++i) {
        if (rec[i].n != static_cast<int>(i) + 1) {
            throw ConfigError("estimate_gkdim: series must cover every n starting at 1");
        }
    }

    auto log2_at = [&](std::size_t n) { return rec[n - 1].log2_dim; };

    int K = 0;
    while ((std::size_t{1} << (K + 1)) <= n_max) ++K;  // n_max = 2^K

    GKEstimate est;
    for (int k = 2; k <= K; ++k) {
        est.doubling_exponents.push_back(log2_at(std::size_t{1} << k) -
                                         log2_at(std::size_t{1} << (k - 1)));
    }

    // exponential gate: sustained per-step rate over the last half,
    // non-decreasing window rates across the last three doublings
    const double tail_rate =
        (log2_at(n_max) - log2_at(n_max / 2)) / static_cast<double>(n_max - n_max / 2);
    bool rates_nondecreasing = true;
    for (int k = K - 1; k <= K; ++k) {
        const double prev = (log2_at(std::size_t{1} << (k - 1)) -
                             log2_at(std::size_t{1} << (k - 2))) /
                            static_cast<double>(std::size_t{1} << (k - 2));
        const double cur = (log2_at(std::size_t{1} << k) -
                            log2_at(std::size_t{1} << (k - 1))) /
                           static_cast<double>(std::size_t{1} << (k - 1));
        if (cur < prev - kMonotoneSlack) rates_nondecreasing = false;
    }

    if (tail_rate > kExpRateThreshold && rates_nondecreasing) {
        est.classification = GrowthClass::Exponential;
        // least-squares slope of log2 a_n over n in [N/2, N]
        const std::size_t lo = n_max / 2;
        double mean_n = 0.0, mean_l = 0.0;
        const double count = static_cast<double>(n_max - lo + 1);
        for (std::size_t n = lo; n <= n_max; ++n) {
            mean_n += static_cast<double>(n);
            mean_l += log2_at(n);
        }
        mean_n /= count;
        mean_l /= count;
        double num = 0.0, den = 0.0;
        for (std::size_t n = lo; n <= n_max; ++n) {
            const double dn = static_cast<double>(n) - mean_n;
            num += dn * (log2_at(n) - mean_l);
            den += dn * dn;
        }
        est.rate = num / den;
        return est;
    }

    // polynomial gate: e_k converges like c/2^k for a_n ~ C n^gamma, so
    // successive Richardson extrapolants 2 e_k - e_{k-1} agree to
    // O(4^-k); require the last two to sit within the convergence bound
    const auto& e = est.doubling_exponents;
    const double rich_last = 2.0 * e[e.size() - 1] - e[e.size() - 2];
    const double rich_prev = 2.0 * e[e.size() - 2] - e[e.size() - 3];
    if (std::abs(rich_last - rich_prev) < kPolyConvergence) {
        est.classification = GrowthClass::Polynomial;
        est.degree = std::max(0.0, rich_last);
        return est;
    }

    est.classification = GrowthClass::Inconclusive;
    return est;
}

}  // namespace fusion
