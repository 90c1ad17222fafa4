#pragma once

/**
 * @file bigfloat.hpp
 * @brief RAII wrapper over MPFR plus a minimal complex type on top of it.
 *
 * Every operation rounds to nearest at the larger precision of its operands.
 */

#include "tribq/bigint.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

namespace tribq {

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision = 64);
    BigFloat(long value, mpfr_prec_t precision);
    BigFloat(const BigInt& value, mpfr_prec_t precision);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Nearest integer, ties away from zero.
    BigInt round() const;
    /// Fixed-point decimal with `digits` digits after the point.
    std::string to_fixed(int digits) const;
    /// Scientific notation with `digits` significant digits.
    std::string to_sci(int digits) const;
    /// floor(log2 |x|), or INT64_MIN for zero.
    std::int64_t exponent2() const;

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }

    /// 2^e at the given precision.
    static BigFloat pow2(long e, mpfr_prec_t precision);

private:
    mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cbrt(const BigFloat& x);
BigFloat log10(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t precision = 64) : re(precision), im(precision) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigFloat& s, const BigComplex& z) { return {s * z.re, s * z.im}; }
};

BigComplex conj(const BigComplex& z);
/// |z|
BigFloat abs(const BigComplex& z);
/// z^n for any integer n (z != 0 when n < 0).
BigComplex pow(const BigComplex& z, std::int64_t n);

}  // namespace tribq
