#pragma once

/**
 * @file binet.hpp
 * @brief Roots of x^3 - x^2 - x - 1 and the Binet closed forms for T, K, Q, Qtilde.
 *
 *   T_n = sum over roots r of r^(n+1) / ((r - s)(r - t))
 *   K_n = alpha^n + beta^n + gamma^n
 *
 * The quaternion forms weight each term by r_ = 1 + i r + j r^2 + k r^3.
 * Results are rounded back to integers only when the rounding is unambiguous.
 */

#include "tribq/bigfloat.hpp"
#include "tribq/quaternion.hpp"
#include "tribq/seqcore.hpp"

#include <array>

namespace tribq {

/// Quaternion whose four coefficients are complex. The complex unit commutes with i, j, k.
struct QuaternionC {
    std::array<BigComplex, 4> c;
};

struct Roots {
    BigComplex alpha;  ///< real root, im == 0
    BigComplex beta;   ///< Im > 0
    BigComplex gamma;  ///< conj(beta)
    /// 1 / ((r - s)(r - t)) for r = alpha, beta, gamma.
    std::array<BigComplex, 3> t_weights;
    int precision_bits = 0;

    const BigComplex& root(std::size_t i) const { return i == 0 ? alpha : i == 1 ? beta : gamma; }
};

constexpr int kMinPrecisionBits = 64;
/// Rounding is refused when the distance to the nearest integer reaches this.
constexpr double kRejectResidue = 0.25;

/// Newton iteration seeded inside [1.8, 1.9] (bracket checked exactly) for alpha,
/// then the deflated quadratic polished by complex Newton for beta and gamma.
/// Cross-checked against the closed radical forms. Throws ConfigError below 64 bits.
Roots compute_roots(int precision_bits);

/// ceil(0.88 |n|) + 96.
int policy_precision(Index n);

struct RoundedComplex {
    BigInt value;
    /// max(|Im z|, |Re z - value|)
    BigFloat residue;
};

/// Throws PrecisionError if the residue is >= 0.25.
RoundedComplex round_certified(const BigComplex& z);

struct ScalarBinet {
    BigComplex approx;
    BigInt rounded;
    BigFloat residue;
    int precision_bits = 0;
};

struct QuaternionBinet {
    QuaternionC approx;
    Quaternion rounded;
    BigFloat residue;  ///< largest component residue
    int precision_bits = 0;
};

/// kind must be T or K. Throws PrecisionError if precision_bits is below
/// policy_precision(n) or the result cannot be rounded confidently.
ScalarBinet binet_scalar(SequenceKind kind, Index n, int precision_bits);
ScalarBinet binet_scalar(SequenceKind kind, Index n, const Roots& roots);

/// kind must be Q or Qtilde.
QuaternionBinet binet_quaternion(QuatSeqKind kind, Index n, int precision_bits);
QuaternionBinet binet_quaternion(QuatSeqKind kind, Index n, const Roots& roots);

/// 1 + i r + j r^2 + k r^3 for root index 0, 1, 2.
QuaternionC root_weight(const Roots& roots, std::size_t which);

/// alpha^n beta^n + alpha^n gamma^n + beta^n gamma^n, unrounded.
BigComplex pairwise_power_sum(const Roots& roots, Index n);

}  // namespace tribq
