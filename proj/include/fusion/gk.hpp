#pragma once

#include <string>
#include <vector>

#include "fusion/growth.hpp"

namespace fusion {

enum class GrowthClass { Polynomial, Exponential, Inconclusive };

std::string to_string(GrowthClass c);

/// Asymptotic classification of a growth series by the doubling-exponent
/// scheme. Exactly one classification holds; `degree` is meaningful in
/// the polynomial case, `rate` (bits per step) in the exponential case.
struct GKEstimate {
    GrowthClass classification = GrowthClass::Inconclusive;
    double degree = 0.0;
    double rate = 0.0;
    std::vector<double> doubling_exponents;  // e_k for k = 2..log2(N)
};

/// Doubling-exponent estimator. Requires the series to cover n = 1..N
/// for N a power of two, N >= 16. With a_n = dim V^n and
/// e_k = log2(a_{2^k} / a_{2^(k-1)}):
///   - exponential when the bit rate over the last half of the series
///     exceeds 0.05 bits/step and the per-window rates are non-decreasing
///     across the last three doublings; the rate is the least-squares
///     slope of log2 a_n over the last half;
///   - else polynomial when the last two Richardson extrapolants
///     2 e_k - e_{k-1} agree within 0.1; degree = 2 e_K - e_{K-1};
///   - else inconclusive.
GKEstimate estimate_gkdim(const GrowthSeries& series);

}  // namespace fusion
