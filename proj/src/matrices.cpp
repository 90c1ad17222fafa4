#include "tribq/matrices.hpp"

#include "tribq/errors.hpp"

#include <stdexcept>

namespace tribq {

Mat3 Mat3::identity() {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) r.m[i][j] = i == j ? 1 : 0;
    }
    return r;
}

Mat3 Mat3::companion() {
    Mat3 r;
    r.m = {{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}};
    return r;
}

Mat3 Mat3::companion_inverse() {
    Mat3 r;
    r.m = {{{0, 1, 0}, {0, 0, 1}, {1, -1, -1}}};
    return r;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            BigInt acc = 0;
            for (std::size_t k = 0; k < 3; ++k) acc += a.m[i][k] * b.m[k][j];
            r.m[i][j] = std::move(acc);
        }
    }
    return r;
}

BigInt det(const Mat3& a) {
    const auto& m = a.m;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 companion_power(Index n) {
    Mat3 base = n < 0 ? Mat3::companion_inverse() : Mat3::companion();
    auto e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    Mat3 result = Mat3::identity();
    while (e != 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

BigInt fast_seq(SequenceKind kind, Index n) {
    std::array<BigInt, 3> state;
    switch (kind) {
        case SequenceKind::T: state = {1, 1, 0}; break;
        case SequenceKind::K: state = {3, 1, 3}; break;
        default: throw UnknownName("fast path exists only for T and K, not " + std::string(to_string(kind)));
    }
    // Bottom row of M^n times (X_2, X_1, X_0) is X_n.
    Mat3 p = companion_power(n);
    return p.m[2][0] * state[0] + p.m[2][1] * state[1] + p.m[2][2] * state[2];
}

Mat2C Mat2C::identity() { return basis_E(); }

Mat2C operator+(const Mat2C& a, const Mat2C& b) {
    Mat2C r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    }
    return r;
}

Mat2C operator-(const Mat2C& a) {
    Mat2C r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) r.m[i][j] = -a.m[i][j];
    }
    return r;
}

Mat2C operator*(const Mat2C& a, const Mat2C& b) {
    Mat2C r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    }
    return r;
}

Mat2C conj_transpose(const Mat2C& a) {
    Mat2C r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) r.m[i][j] = conj(a.m[j][i]);
    }
    return r;
}

Mat2C basis_E() { return Mat2C{{{{GaussInt(1), GaussInt(0)}, {GaussInt(0), GaussInt(1)}}}}; }
Mat2C basis_I() { return Mat2C{{{{GaussInt(0, 1), GaussInt(0)}, {GaussInt(0), GaussInt(0, -1)}}}}; }
Mat2C basis_J() { return Mat2C{{{{GaussInt(0), GaussInt(-1)}, {GaussInt(1), GaussInt(0)}}}}; }
Mat2C basis_K() { return Mat2C{{{{GaussInt(0), GaussInt(0, -1)}, {GaussInt(0, -1), GaussInt(0)}}}}; }

Mat2C phi(const Quaternion& q) {
    GaussInt z{q.a0, q.a1};
    GaussInt w{q.a2, q.a3};
    return Mat2C{{{{z, -w}, {conj(w), conj(z)}}}};
}

Quaternion phi_inverse(const Mat2C& m) {
    const GaussInt& z = m.m[0][0];
    GaussInt w = -m.m[0][1];
    if (!(m.m[1][0] == conj(w)) || !(m.m[1][1] == conj(z))) {
        throw NotInImage("matrix is not of the form [[z, -w], [conj(w), conj(z)]]");
    }
    return {z.re, z.im, w.re, w.im};
}

GaussInt det2(const Mat2C& m) { return m.m[0][0] * m.m[1][1] - m.m[0][1] * m.m[1][0]; }

std::string to_display(const Mat2C& m) {
    std::string out;
    for (const auto& row : m.m) out += "[ " + to_string(row[0]) + "  " + to_string(row[1]) + " ]\n";
    return out;
}

std::string to_display(const Mat3& m) {
    std::string out;
    for (const auto& row : m.m) {
        out += "[";
        for (const auto& v : row) out += " " + to_decimal(v);
        out += " ]\n";
    }
    return out;
}

}  // namespace tribq
