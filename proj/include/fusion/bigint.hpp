#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fusion {

using BigInt = boost::multiprecision::cpp_int;

/// Base-2 logarithm of a positive integer, computed from the bit length
/// and the leading 64 bits of the mantissa. Never converts the whole
/// integer to a machine float; absolute error is below 2^-50.
inline double log2_of(const BigInt& v) {
    if (v <= 0) {
        throw std::domain_error("log2_of: argument must be positive");
    }
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(v)) + 1;
    if (bits <= 63) {
        return std::log2(static_cast<double>(v.convert_to<std::uint64_t>()));
    }
    const unsigned shift = bits - 63;
    const std::uint64_t top = BigInt(v >> shift).convert_to<std::uint64_t>();
    return static_cast<double>(shift) + std::log2(static_cast<double>(top));
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace fusion
