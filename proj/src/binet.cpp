#include "tribq/binet.hpp"

#include "tribq/errors.hpp"

#include <stdexcept>
#include <string>

namespace tribq {

namespace {

BigComplex constant(long re, mpfr_prec_t p) { return {BigFloat(re, p), BigFloat(0, p)}; }

// p^3 - p^2 q - p q^2 - q^3, the sign of f(p/q) scaled by q^3 > 0.
BigInt scaled_cubic(long p, long q) {
    BigInt bp(p), bq(q);
    return bp * bp * bp - bp * bp * bq - bp * bq * bq - bq * bq * bq;
}

template <typename V>
V cubic(const V& x, const V& one) {
    return ((x - one) * x - one) * x - one;
}

template <typename V>
V cubic_derivative(const V& x, const V& one, const V& two, const V& three) {
    return (three * x - two) * x - one;
}

bool below(const BigFloat& magnitude, std::int64_t log2_bound) {
    return magnitude.is_zero() || magnitude.exponent2() < log2_bound;
}

BigFloat newton_real_root(mpfr_prec_t p) {
    if (!(scaled_cubic(9, 5) < 0 && scaled_cubic(19, 10) > 0)) {
        throw std::logic_error("x^3 - x^2 - x - 1 has no sign change on [1.8, 1.9]");
    }
    const BigFloat one(1, p), two(2, p), three(3, p);
    BigFloat x = BigFloat(184, p) / BigFloat(100, p);
    bool settled = false;
    for (int iter = 0; iter < 256; ++iter) {
        BigFloat step = cubic(x, one) / cubic_derivative(x, one, two, three);
        x = x - step;
        // One extra pass after the step falls below the target to absorb rounding.
        if (below(abs(step), -static_cast<std::int64_t>(p) + 2)) {
            if (settled) break;
            settled = true;
        }
    }
    const BigFloat lo = BigFloat(18, p) / BigFloat(10, p), hi = BigFloat(19, p) / BigFloat(10, p);
    if (x < lo || x > hi) throw std::logic_error("Newton iteration left the bracket [1.8, 1.9]");
    return x;
}

BigComplex newton_complex_root(BigComplex z, mpfr_prec_t p) {
    const BigComplex one = constant(1, p), two = constant(2, p), three = constant(3, p);
    bool settled = false;
    for (int iter = 0; iter < 256; ++iter) {
        BigComplex step = cubic(z, one) / cubic_derivative(z, one, two, three);
        z = z - step;
        if (below(abs(step), -static_cast<std::int64_t>(p) + 2)) {
            if (settled) break;
            settled = true;
        }
    }
    return z;
}

void check_against_radicals(const Roots& roots, mpfr_prec_t p) {
    const BigFloat one(1, p), three(3, p), half = BigFloat(1, p) / BigFloat(2, p);
    BigFloat s33 = sqrt(BigFloat(33, p));
    BigFloat plus = cbrt(BigFloat(19, p) + three * s33);
    BigFloat minus = cbrt(BigFloat(19, p) - three * s33);
    BigComplex w{-half, sqrt(three) * half};
    BigComplex w2 = conj(w);
    BigComplex third{one / three, BigFloat(0, p)};
    BigComplex alpha_r = third * (constant(1, p) + BigComplex{plus, BigFloat(0, p)} + BigComplex{minus, BigFloat(0, p)});
    BigComplex beta_r = third * (constant(1, p) + w * BigComplex{plus, BigFloat(0, p)} +
                                 w2 * BigComplex{minus, BigFloat(0, p)});
    BigComplex gamma_r = conj(beta_r);
    const auto bound = -static_cast<std::int64_t>(p) + 8;
    if (!below(abs(roots.alpha - alpha_r), bound) || !below(abs(roots.beta - beta_r), bound) ||
        !below(abs(roots.gamma - gamma_r), bound)) {
        throw PrecisionError("Newton roots disagree with the radical closed forms at " + std::to_string(p) + " bits");
    }
}

void require_policy(Index n, const Roots& roots) {
    if (roots.precision_bits < policy_precision(n)) {
        throw PrecisionError("precision " + std::to_string(roots.precision_bits) + " bits is below the policy minimum " +
                             std::to_string(policy_precision(n)) + " for n = " + std::to_string(n));
    }
}

// Coefficient multiplying the r-th root weight.
BigComplex term_coefficient(bool tribonacci_kind, const Roots& roots, std::size_t r, Index n) {
    if (tribonacci_kind) return roots.t_weights[r] * pow(roots.root(r), n + 1);
    return pow(roots.root(r), n);
}

}  // namespace

Roots compute_roots(int precision_bits) {
    if (precision_bits < kMinPrecisionBits) {
        throw ConfigError("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits, got " +
                          std::to_string(precision_bits));
    }
    const auto p = static_cast<mpfr_prec_t>(precision_bits);
    Roots roots;
    roots.precision_bits = precision_bits;
    BigFloat a = newton_real_root(p);
    roots.alpha = BigComplex{a, BigFloat(0, p)};

    // x^3 - x^2 - x - 1 = (x - alpha)(x^2 + (alpha - 1) x + 1/alpha)
    BigFloat b = a - BigFloat(1, p);
    BigFloat c = BigFloat(1, p) / a;
    BigFloat disc = BigFloat(4, p) * c - b * b;
    BigFloat half = BigFloat(1, p) / BigFloat(2, p);
    BigComplex seed{-b * half, sqrt(disc) * half};
    roots.beta = newton_complex_root(seed, p);
    roots.gamma = conj(roots.beta);

    for (std::size_t r = 0; r < 3; ++r) {
        const BigComplex& x = roots.root(r);
        const BigComplex& y = roots.root((r + 1) % 3);
        const BigComplex& z = roots.root((r + 2) % 3);
        roots.t_weights[r] = constant(1, p) / ((x - y) * (x - z));
    }
    check_against_radicals(roots, p);
    return roots;
}

int policy_precision(Index n) {
    std::int64_t magnitude = n < 0 ? -n : n;
    return static_cast<int>((88 * magnitude + 99) / 100 + 96);
}

RoundedComplex round_certified(const BigComplex& z) {
    BigInt value = z.re.round();
    BigFloat residue = max(abs(z.im), abs(z.re - BigFloat(value, z.re.precision())));
    if (residue.to_double() >= kRejectResidue) {
        throw PrecisionError("cannot round " + z.re.to_sci(20) + " + " + z.im.to_sci(6) +
                             "i to an integer: residue " + residue.to_sci(6) + " >= 0.25");
    }
    return {std::move(value), std::move(residue)};
}

ScalarBinet binet_scalar(SequenceKind kind, Index n, int precision_bits) {
    return binet_scalar(kind, n, compute_roots(precision_bits));
}

ScalarBinet binet_scalar(SequenceKind kind, Index n, const Roots& roots) {
    if (kind != SequenceKind::T && kind != SequenceKind::K) {
        throw UnknownName("Binet form exists only for T and K, not " + std::string(to_string(kind)));
    }
    require_policy(n, roots);
    const bool trib = kind == SequenceKind::T;
    BigComplex sum = term_coefficient(trib, roots, 0, n);
    sum = sum + term_coefficient(trib, roots, 1, n);
    sum = sum + term_coefficient(trib, roots, 2, n);
    RoundedComplex r = round_certified(sum);
    return {std::move(sum), std::move(r.value), std::move(r.residue), roots.precision_bits};
}

QuaternionC root_weight(const Roots& roots, std::size_t which) {
    const BigComplex& r = roots.root(which);
    const auto p = r.precision();
    BigComplex sq = r * r;
    return QuaternionC{{constant(1, p), r, sq, sq * r}};
}

QuaternionBinet binet_quaternion(QuatSeqKind kind, Index n, int precision_bits) {
    return binet_quaternion(kind, n, compute_roots(precision_bits));
}

QuaternionBinet binet_quaternion(QuatSeqKind kind, Index n, const Roots& roots) {
    if (kind != QuatSeqKind::Q && kind != QuatSeqKind::Qtilde) {
        throw UnknownName("Binet form exists only for Q and Qtilde, not " + std::string(to_string(kind)));
    }
    require_policy(n, roots);
    const bool trib = kind == QuatSeqKind::Q;
    const auto p = static_cast<mpfr_prec_t>(roots.precision_bits);
    QuaternionC approx{{constant(0, p), constant(0, p), constant(0, p), constant(0, p)}};
    for (std::size_t r = 0; r < 3; ++r) {
        BigComplex coefficient = term_coefficient(trib, roots, r, n);
        QuaternionC weight = root_weight(roots, r);
        for (std::size_t c = 0; c < 4; ++c) approx.c[c] = approx.c[c] + coefficient * weight.c[c];
    }
    QuaternionBinet out{approx, Quaternion{}, BigFloat(0, p), roots.precision_bits};
    for (std::size_t c = 0; c < 4; ++c) {
        RoundedComplex r = round_certified(approx.c[c]);
        out.rounded[c] = std::move(r.value);
        out.residue = max(out.residue, r.residue);
    }
    return out;
}

BigComplex pairwise_power_sum(const Roots& roots, Index n) {
    BigComplex a = pow(roots.alpha, n), b = pow(roots.beta, n), c = pow(roots.gamma, n);
    return a * b + a * c + b * c;
}

}  // namespace tribq
