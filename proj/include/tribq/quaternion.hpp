#pragma once

/**
 * @file quaternion.hpp
 * @brief Exact quaternions over BigInt and the Tribonacci quaternion sequences.
 *
 * Basis products: ij = k, jk = i, ki = j, ji = -k, kj = -i, ik = -j,
 * i^2 = j^2 = k^2 = -1.
 */

#include "tribq/bigint.hpp"
#include "tribq/seqcore.hpp"

#include <array>
#include <string>
#include <string_view>

namespace tribq {

/// q = a0 + a1 i + a2 j + a3 k.
struct Quaternion {
    BigInt a0, a1, a2, a3;

    Quaternion() = default;
    Quaternion(BigInt r, BigInt x = 0, BigInt y = 0, BigInt z = 0)
        : a0(std::move(r)), a1(std::move(x)), a2(std::move(y)), a3(std::move(z)) {}
    Quaternion(long r, long x = 0, long y = 0, long z = 0) : a0(r), a1(x), a2(y), a3(z) {}

    static Quaternion unit_i() { return {0, 1, 0, 0}; }
    static Quaternion unit_j() { return {0, 0, 1, 0}; }
    static Quaternion unit_k() { return {0, 0, 0, 1}; }

    const BigInt& operator[](std::size_t c) const;
    BigInt& operator[](std::size_t c);

    bool is_zero() const { return a0 == 0 && a1 == 0 && a2 == 0 && a3 == 0; }

    friend bool operator==(const Quaternion& p, const Quaternion& q) {
        return p.a0 == q.a0 && p.a1 == q.a1 && p.a2 == q.a2 && p.a3 == q.a3;
    }

    Quaternion& operator+=(const Quaternion& q);
    Quaternion& operator-=(const Quaternion& q);
};

Quaternion operator+(const Quaternion& p, const Quaternion& q);
Quaternion operator-(const Quaternion& p, const Quaternion& q);
Quaternion operator-(const Quaternion& q);
/// Hamilton product.
Quaternion operator*(const Quaternion& p, const Quaternion& q);
Quaternion operator*(const BigInt& s, const Quaternion& q);
Quaternion operator*(const Quaternion& q, const BigInt& s);

inline Quaternion qadd(const Quaternion& p, const Quaternion& q) { return p + q; }
inline Quaternion qmul(const Quaternion& p, const Quaternion& q) { return p * q; }
Quaternion qconj(const Quaternion& q);
BigInt qnorm(const Quaternion& q);

/// numerator / denominator, denominator > 0, not reduced.
struct RationalQuaternion {
    Quaternion numerator;
    BigInt denominator;

    friend bool operator==(const RationalQuaternion&, const RationalQuaternion&) = default;
};

/// conj(q) / N(q). Throws DivisionByZero for q = 0.
RationalQuaternion qinv(const Quaternion& q);

/// Product through the complex-pair form q = q1 + q2 j with q1 = a0 + a1 i and
/// q2 = a2 + a3 i:
///   q q' = [q1 q1' - conj(q2') q2] + j [conj(q2') conj(q1) + conj(q2) q1'].
/// Always equal to qmul(p, q).
Quaternion cd_mul(const Quaternion& p, const Quaternion& q);

/// "a0 + a1 i + a2 j + a3 k"; negative coefficients print as "- |a| i".
std::string to_display(const Quaternion& q);

enum class QuatSeqKind { Q, Qtilde, Rtilde, Utilde, Cunder };

std::string_view to_string(QuatSeqKind kind);
QuatSeqKind parse_quat_kind(std::string_view name);
/// 0 for Rtilde and Utilde, INT64_MIN otherwise.
Index domain_min(QuatSeqKind kind);

/// Q_n = T_n + i T_{n+1} + j T_{n+2} + k T_{n+3} (likewise Qtilde over K,
/// Rtilde over R, Utilde over U). Cunder_n runs downwards:
/// C_n + i C_{n-1} + j C_{n-2} + k C_{n-3}.
Quaternion seq_quaternion(QuatSeqKind kind, Index n);

/// Sum of seq_quaternion(kind, start + t*stride) for t in [0, count).
Quaternion q_progression_sum(QuatSeqKind kind, Index start, Index stride, Index count);

}  // namespace tribq
