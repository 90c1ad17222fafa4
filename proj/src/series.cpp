#include "tribq/series.hpp"

#include "tribq/errors.hpp"

#include <string>

namespace tribq {

std::vector<Quaternion> expand(const RationalSeries& series, std::size_t count) {
    const auto& den = series.denominator;
    if (den.empty()) throw UnsupportedDenominator("empty denominator");
    if (den[0] != 1 && den[0] != -1) {
        throw UnsupportedDenominator("denominator constant term must be 1 or -1, got " + to_decimal(den[0]));
    }
    std::vector<Quaternion> coeffs;
    coeffs.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        Quaternion c = n < series.numerator.size() ? series.numerator[n] : Quaternion{};
        for (std::size_t k = 1; k < den.size() && k <= n; ++k) {
            if (den[k] != 0) c -= den[k] * coeffs[n - k];
        }
        // Dividing by +-1 is a sign flip.
        if (den[0] < 0) c = -c;
        coeffs.push_back(std::move(c));
    }
    return coeffs;
}

std::vector<BigInt> expand_scalar(const RationalSeries& series, std::size_t count) {
    std::vector<BigInt> out;
    out.reserve(count);
    for (auto& q : expand(series, count)) out.push_back(std::move(q.a0));
    return out;
}

std::vector<BigInt> poly_multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

namespace {

std::vector<Quaternion> scalars(std::initializer_list<long> values) {
    std::vector<Quaternion> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

std::vector<BigInt> ints(std::initializer_list<long> values) {
    std::vector<BigInt> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

}  // namespace

RationalSeries builtin_series(std::string_view name) {
    const std::vector<BigInt> tribonacci_den = ints({1, -1, -1, -1});
    if (name == "f") return {scalars({0, 1}), tribonacci_den};
    if (name == "h") return {scalars({3, -2, -1}), tribonacci_den};
    if (name == "G") {
        // x + i + j(1 + x + x^2) + k(2 + 2x + x^2), grouped by power of x.
        return {{Quaternion{0, 1, 1, 2}, Quaternion{1, 0, 1, 2}, Quaternion{0, 0, 1, 1}}, tribonacci_den};
    }
    if (name == "normT") {
        // 2(3 + 5x + 4x^2 - 2x^3 - x^4 - x^5) / ((1 - 3x - x^2 - x^3)(1 + x + x^2 - x^3)),
        // denominator multiplied out.
        return {scalars({6, 10, 8, -4, -2, -2}), ints({1, -2, -3, -6, 1, 0, 1})};
    }
    throw UnknownName("unknown series '" + std::string(name) + "' (expected f, h, G or normT)");
}

}  // namespace tribq
