#pragma once

#include <gmpxx.h>

#include <string>

namespace tribq {

/// Arbitrary-precision signed integer. All exact scalar arithmetic goes through this.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Throws std::invalid_argument on anything but an optionally signed run of decimal digits.
BigInt parse_decimal(const std::string& text);

/// Number of decimal digits in |v| (0 has one digit).
std::size_t decimal_digits(const BigInt& v);

}  // namespace tribq
