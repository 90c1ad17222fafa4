#include "tribq/errors.hpp"
#include "tribq/series.hpp"

#include <doctest.h>

using namespace tribq;

TEST_CASE("normT denominator is the product of the printed cubic factors") {
    std::vector<BigInt> a{1, -3, -1, -1}, b{1, 1, 1, -1};
    CHECK(poly_multiply(a, b) == builtin_series("normT").denominator);
    CHECK(poly_multiply({}, a).empty());
    CHECK(poly_multiply({2}, {3, 4}) == std::vector<BigInt>{6, 8});
}

TEST_CASE("f and h give T and K") {
    auto f = expand_scalar(builtin_series("f"), 64);
    auto h = expand_scalar(builtin_series("h"), 64);
    REQUIRE(f.size() == 64);
    REQUIRE(h.size() == 64);
    for (Index n = 0; n < 64; ++n) {
        CHECK(f[static_cast<std::size_t>(n)] == tribonacci(n));
        CHECK(h[static_cast<std::size_t>(n)] == tribonacci_lucas(n));
    }
    CHECK(std::vector<BigInt>(f.begin(), f.begin() + 8) == std::vector<BigInt>{0, 1, 1, 2, 4, 7, 13, 24});
    CHECK(std::vector<BigInt>(h.begin(), h.begin() + 5) == std::vector<BigInt>{3, 1, 3, 7, 11});
}

TEST_CASE("G gives the quaternion sequence") {
    auto g = expand(builtin_series("G"), 65);
    for (Index n = 0; n <= 64; ++n) CHECK(g[static_cast<std::size_t>(n)] == seq_quaternion(QuatSeqKind::Q, n));
    CHECK(g[0] == Quaternion{0, 1, 1, 2});
    CHECK(g[1] == Quaternion{1, 1, 2, 4});
    CHECK(g[2] == Quaternion{1, 2, 4, 7});
}

TEST_CASE("normT gives the quaternion norms") {
    auto c = expand_scalar(builtin_series("normT"), 65);
    for (Index n = 0; n <= 64; ++n) {
        BigInt direct = 0;
        for (Index k = 0; k < 4; ++k) direct += tribonacci(n + k) * tribonacci(n + k);
        CHECK(c[static_cast<std::size_t>(n)] == qnorm(seq_quaternion(QuatSeqKind::Q, n)));
        CHECK(c[static_cast<std::size_t>(n)] == direct);
    }
    CHECK(std::vector<BigInt>(c.begin(), c.begin() + 6) == std::vector<BigInt>{6, 22, 70, 238, 810, 2730});
}

TEST_CASE("shorter expansions are prefixes of longer ones") {
    for (const char* name : {"f", "h", "G", "normT"}) {
        auto longer = expand(builtin_series(name), 40);
        for (std::size_t k : {0u, 1u, 7u, 39u}) {
            auto shorter = expand(builtin_series(name), k);
            CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
        }
    }
}

TEST_CASE("leading denominator must be a unit") {
    CHECK_THROWS_AS(expand(RationalSeries{{Quaternion{1}}, {2, 1}}, 4), UnsupportedDenominator);
    CHECK_THROWS_AS(expand(RationalSeries{{Quaternion{1}}, {}}, 4), UnsupportedDenominator);
    auto neg = expand_scalar(RationalSeries{{Quaternion{1}}, {-1, 1}}, 4);
    CHECK(neg == std::vector<BigInt>{-1, -1, -1, -1});
    CHECK_THROWS_AS(builtin_series("zeta"), UnknownName);
}
