#pragma once

// Independent reference computations used to pin expected values. These
// deliberately avoid the code paths they check: SL(2) products go
// through Laurent character arithmetic, SL(n) products through monomial
// expansions of Schur polynomials, dimensions through tableau counting.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fusion/bigint.hpp"
#include "fusion/rings/sln.hpp"

namespace oracles {

/// Expands chi_m * chi_n in the chi basis, where chi_k is the Laurent
/// character t^-k + t^-k+2 + ... + t^k. Returns (spin, multiplicity)
/// sorted by spin.
std::vector<std::pair<std::int64_t, std::int64_t>> sl2_character_product(std::int64_t m,
                                                                         std::int64_t n);

/// Monomials of the Schur polynomial s_shape(x_1..x_n) by semistandard
/// tableau enumeration; exponent vectors mapped to coefficients.
std::map<std::vector<std::int64_t>, std::int64_t> schur_monomials(
    const fusion::Partition& shape, int n);

/// Number of semistandard tableaux of the given shape with entries
/// 1..n; equals the Weyl dimension.
fusion::BigInt ssyt_count(const fusion::Partition& shape, int n);

/// s_lambda * s_mu in n variables expanded back into the Schur basis by
/// repeatedly peeling the lexicographically largest monomial. Returns
/// (nu, coefficient) sorted by nu; nu is not reduced modulo full
/// columns.
std::vector<std::pair<fusion::Partition, std::int64_t>> schur_product_expand(
    const fusion::Partition& lambda, const fusion::Partition& mu, int n);

/// GL(2) product via Laurent characters in two variables. Labels are
/// (spin, det power); char(a,k) = sum_i x^{i+k} y^{a-i+k}. Returns
/// ((spin, det), multiplicity) sorted.
std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::int64_t>>
gl2_character_product(std::pair<std::int64_t, std::int64_t> a,
                      std::pair<std::int64_t, std::int64_t> b);

}  // namespace oracles
