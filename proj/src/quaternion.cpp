#include "tribq/quaternion.hpp"

#include "tribq/errors.hpp"
#include "tribq/gaussint.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace tribq {

const BigInt& Quaternion::operator[](std::size_t c) const {
    switch (c) {
        case 0: return a0;
        case 1: return a1;
        case 2: return a2;
        case 3: return a3;
    }
    throw std::out_of_range("quaternion component " + std::to_string(c));
}

BigInt& Quaternion::operator[](std::size_t c) {
    return const_cast<BigInt&>(std::as_const(*this)[c]);
}

Quaternion& Quaternion::operator+=(const Quaternion& q) {
    a0 += q.a0;
    a1 += q.a1;
    a2 += q.a2;
    a3 += q.a3;
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& q) {
    a0 -= q.a0;
    a1 -= q.a1;
    a2 -= q.a2;
    a3 -= q.a3;
    return *this;
}

Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    Quaternion r = p;
    r += q;
    return r;
}

Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    Quaternion r = p;
    r -= q;
    return r;
}

Quaternion operator-(const Quaternion& q) { return {-q.a0, -q.a1, -q.a2, -q.a3}; }

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {
        p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
        p.a0 * q.a1 + p.a1 * q.a0 + p.a2 * q.a3 - p.a3 * q.a2,
        p.a0 * q.a2 - p.a1 * q.a3 + p.a2 * q.a0 + p.a3 * q.a1,
        p.a0 * q.a3 + p.a1 * q.a2 - p.a2 * q.a1 + p.a3 * q.a0,
    };
}

Quaternion operator*(const BigInt& s, const Quaternion& q) { return {s * q.a0, s * q.a1, s * q.a2, s * q.a3}; }

Quaternion operator*(const Quaternion& q, const BigInt& s) { return s * q; }

Quaternion qconj(const Quaternion& q) { return {q.a0, -q.a1, -q.a2, -q.a3}; }

BigInt qnorm(const Quaternion& q) { return q.a0 * q.a0 + q.a1 * q.a1 + q.a2 * q.a2 + q.a3 * q.a3; }

RationalQuaternion qinv(const Quaternion& q) {
    if (q.is_zero()) throw DivisionByZero("the zero quaternion has no inverse");
    return {qconj(q), qnorm(q)};
}

Quaternion cd_mul(const Quaternion& p, const Quaternion& q) {
    const GaussInt p1{p.a0, p.a1}, p2{p.a2, p.a3};
    const GaussInt q1{q.a0, q.a1}, q2{q.a2, q.a3};
    GaussInt first = p1 * q1 - conj(q2) * p2;
    GaussInt second = conj(q2) * conj(p1) + conj(p2) * q1;
    // j (x + y i) = x j - y k
    return {first.re, first.im, second.re, -second.im};
}

std::string to_display(const Quaternion& q) {
    std::string out = to_decimal(q.a0);
    const char* units[] = {" i", " j", " k"};
    for (std::size_t c = 1; c < 4; ++c) {
        const BigInt& v = q[c];
        out += v < 0 ? " - " + to_decimal(BigInt(-v)) : " + " + to_decimal(v);
        out += units[c - 1];
    }
    return out;
}

std::string_view to_string(QuatSeqKind kind) {
    switch (kind) {
        case QuatSeqKind::Q: return "Q";
        case QuatSeqKind::Qtilde: return "Qtilde";
        case QuatSeqKind::Rtilde: return "Rtilde";
        case QuatSeqKind::Utilde: return "Utilde";
        case QuatSeqKind::Cunder: return "Cunder";
    }
    return "?";
}

QuatSeqKind parse_quat_kind(std::string_view name) {
    if (name == "Q") return QuatSeqKind::Q;
    if (name == "Qtilde") return QuatSeqKind::Qtilde;
    if (name == "Rtilde") return QuatSeqKind::Rtilde;
    if (name == "Utilde") return QuatSeqKind::Utilde;
    if (name == "Cunder") return QuatSeqKind::Cunder;
    throw UnknownName("unknown quaternion kind '" + std::string(name) +
                      "' (expected Q, Qtilde, Rtilde, Utilde or Cunder)");
}

Index domain_min(QuatSeqKind kind) {
    switch (kind) {
        case QuatSeqKind::Rtilde:
        case QuatSeqKind::Utilde: return 0;
        default: return std::numeric_limits<Index>::min();
    }
}

Quaternion seq_quaternion(QuatSeqKind kind, Index n) {
    if (n < domain_min(kind)) {
        throw DomainError("index " + std::to_string(n) + " outside the domain of " + std::string(to_string(kind)) +
                          " (n >= 0)");
    }
    auto ascending = [n](SequenceKind s) {
        return Quaternion{derived_scalar(s, n), derived_scalar(s, n + 1), derived_scalar(s, n + 2),
                          derived_scalar(s, n + 3)};
    };
    switch (kind) {
        case QuatSeqKind::Q: return ascending(SequenceKind::T);
        case QuatSeqKind::Qtilde: return ascending(SequenceKind::K);
        case QuatSeqKind::Rtilde: return ascending(SequenceKind::R);
        case QuatSeqKind::Utilde: return ascending(SequenceKind::U);
        case QuatSeqKind::Cunder:
            return {derived_scalar(SequenceKind::C, n), derived_scalar(SequenceKind::C, n - 1),
                    derived_scalar(SequenceKind::C, n - 2), derived_scalar(SequenceKind::C, n - 3)};
    }
    throw std::logic_error("unhandled quaternion kind");
}

Quaternion q_progression_sum(QuatSeqKind kind, Index start, Index stride, Index count) {
    if (stride < 1) throw std::invalid_argument("stride must be >= 1");
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    if (count > 0 && start < domain_min(kind)) {
        throw DomainError("progression starting at " + std::to_string(start) + " leaves the domain of " +
                          std::string(to_string(kind)));
    }
    Quaternion sum;
    for (Index t = 0; t < count; ++t) sum += seq_quaternion(kind, start + t * stride);
    return sum;
}

}  // namespace tribq
