#pragma once

/**
 * @file series.hpp
 * @brief Power-series expansion of numerator/denominator pairs whose numerator
 *        coefficients are quaternions (integers embed as scalar quaternions).
 */

#include "tribq/bigint.hpp"
#include "tribq/quaternion.hpp"

#include <string_view>
#include <vector>

namespace tribq {

/// Coefficients in ascending powers of x. denominator[0] must be +1 or -1.
struct RationalSeries {
    std::vector<Quaternion> numerator;
    std::vector<BigInt> denominator;
};

/// First `count` coefficients of numerator / denominator:
///   c_n = (num_n - sum_{k>=1} den_k c_{n-k}) / den_0
/// Throws UnsupportedDenominator if the denominator is empty or den_0 is not +-1.
std::vector<Quaternion> expand(const RationalSeries& series, std::size_t count);

/// Scalar parts of expand(); convenient for the integer series f, h and normT.
std::vector<BigInt> expand_scalar(const RationalSeries& series, std::size_t count);

std::vector<BigInt> poly_multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

/// f, h, G or normT. Throws UnknownName otherwise.
RationalSeries builtin_series(std::string_view name);

}  // namespace tribq
