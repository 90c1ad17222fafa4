#include "tribq/bigfloat.hpp"

#include "tribq/errors.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace tribq {

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    // Leave `other` as a valid minimal-precision zero so its destructor stays sound.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigInt BigFloat::round() const {
    BigInt out;
    BigFloat r(precision());
    mpfr_round(r.value_, value_);
    mpfr_get_z(out.get_mpz_t(), r.value_, MPFR_RNDN);
    return out;
}

std::string BigFloat::to_fixed(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(precision() / 3 + digits + 64));
    int n = mpfr_snprintf(buf.data(), buf.size(), "%.*RNf", digits, value_);
    if (n >= static_cast<int>(buf.size())) {
        buf.resize(static_cast<std::size_t>(n) + 1);
        mpfr_snprintf(buf.data(), buf.size(), "%.*RNf", digits, value_);
    }
    return buf.data();
}

std::string BigFloat::to_sci(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits + 64));
    mpfr_snprintf(buf.data(), buf.size(), "%.*RNe", std::max(digits - 1, 0), value_);
    return buf.data();
}

std::int64_t BigFloat::exponent2() const {
    if (is_zero()) return std::numeric_limits<std::int64_t>::min();
    // mpfr exponent e means |x| in [2^(e-1), 2^e).
    return static_cast<std::int64_t>(mpfr_get_exp(value_)) - 1;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t precision) {
    BigFloat r(precision);
    mpfr_set_ui_2exp(r.value_, 1, e, MPFR_RNDN);
    return r;
}

namespace {

mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(joint(a, b));
    mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw DivisionByZero("BigFloat division by zero");
    BigFloat r(joint(a, b));
    mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.value_, a.value_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat cbrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_cbrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat log10(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_log10(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat denom = b.re * b.re + b.im * b.im;
    if (denom.is_zero()) throw DivisionByZero("BigComplex division by zero");
    return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigFloat abs(const BigComplex& z) {
    BigFloat r(z.precision());
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}

BigComplex pow(const BigComplex& z, std::int64_t n) {
    const mpfr_prec_t p = z.precision();
    BigComplex result{BigFloat(1, p), BigFloat(0, p)};
    BigComplex base = z;
    // Unsigned magnitude so INT64_MIN is safe.
    auto e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    while (e != 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    if (n < 0) result = BigComplex{BigFloat(1, p), BigFloat(0, p)} / result;
    return result;
}

}  // namespace tribq
