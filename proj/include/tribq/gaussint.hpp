#pragma once

#include "tribq/bigint.hpp"

#include <string>

namespace tribq {

/// Gaussian integer re + im*i with exact BigInt parts.
struct GaussInt {
    BigInt re;
    BigInt im;

    GaussInt() = default;
    GaussInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussInt(long r, long i = 0) : re(r), im(i) {}

    friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussInt& operator+=(const GaussInt& o) { re += o.re; im += o.im; return *this; }
};

inline GaussInt conj(const GaussInt& z) { return {z.re, -z.im}; }

/// "a+bi" / "a-bi" with decimal parts.
inline std::string to_string(const GaussInt& z) {
    std::string s = to_decimal(z.re);
    if (z.im < 0) {
        s += "-" + to_decimal(BigInt(-z.im)) + "i";
    } else {
        s += "+" + to_decimal(z.im) + "i";
    }
    return s;
}

}  // namespace tribq
