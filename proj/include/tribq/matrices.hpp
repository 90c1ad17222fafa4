#pragma once

/**
 * @file matrices.hpp
 * @brief Companion-matrix evaluation of T and K, and the representation of
 *        quaternions as 2x2 Gaussian-integer matrices
 *
 *   phi(a0 + a1 i + a2 j + a3 k) = a0 E + a1 I + a2 J + a3 K
 *                                = [[ z, -w], [conj(w), conj(z)]]
 *   with z = a0 + a1 i, w = a2 + a3 i.
 */

#include "tribq/bigint.hpp"
#include "tribq/gaussint.hpp"
#include "tribq/quaternion.hpp"
#include "tribq/seqcore.hpp"

#include <array>
#include <string>

namespace tribq {

struct Mat3 {
    std::array<std::array<BigInt, 3>, 3> m;

    static Mat3 identity();
    /// rows (1 1 1 / 1 0 0 / 0 1 0)
    static Mat3 companion();
    /// companion()^-1 = companion()^2 - companion() - identity()
    static Mat3 companion_inverse();

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }
    friend Mat3 operator*(const Mat3& a, const Mat3& b);
};

BigInt det(const Mat3& a);

/// M^n by binary exponentiation; negative n uses the integer inverse.
Mat3 companion_power(Index n);

/// T_n or K_n read off M^n applied to the state (X_2, X_1, X_0).
BigInt fast_seq(SequenceKind kind, Index n);

struct Mat2C {
    std::array<std::array<GaussInt, 2>, 2> m;

    static Mat2C identity();

    friend bool operator==(const Mat2C& a, const Mat2C& b) { return a.m == b.m; }
    friend Mat2C operator+(const Mat2C& a, const Mat2C& b);
    friend Mat2C operator-(const Mat2C& a);
    friend Mat2C operator*(const Mat2C& a, const Mat2C& b);
};

Mat2C conj_transpose(const Mat2C& a);

/// Basis images. K is [[0, -i], [-i, 0]]: the only choice that makes phi
/// multiplicative given E, I, J and the entries of phi(q).
Mat2C basis_E();
Mat2C basis_I();
Mat2C basis_J();
Mat2C basis_K();

Mat2C phi(const Quaternion& q);

/// Throws NotInImage unless m = [[z, -w], [conj(w), conj(z)]].
Quaternion phi_inverse(const Mat2C& m);

GaussInt det2(const Mat2C& m);

/// Row-major, one row per line, entries "a+bi".
std::string to_display(const Mat2C& m);
std::string to_display(const Mat3& m);

}  // namespace tribq
