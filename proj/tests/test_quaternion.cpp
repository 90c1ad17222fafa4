#include "tribq/errors.hpp"
#include "tribq/quaternion.hpp"

#include <doctest.h>

#include <random>

using namespace tribq;

namespace {

Quaternion random_quaternion(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    return {d(rng), d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("addition") {
    Quaternion q{3, -4, 5, 6};
    CHECK(qadd(Quaternion{}, q) == q);
    CHECK(qadd(seq_quaternion(QuatSeqKind::Q, 1), seq_quaternion(QuatSeqKind::Q, 2)) == Quaternion{2, 3, 6, 11});
    CHECK(qadd(q, -q).is_zero());
}

TEST_CASE("hamilton product follows the basis table") {
    const Quaternion one{1}, i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
    CHECK(qmul(i, j) == k);
    CHECK(qmul(j, i) == -k);
    CHECK(qmul(j, k) == i);
    CHECK(qmul(k, j) == -i);
    CHECK(qmul(k, i) == j);
    CHECK(qmul(i, k) == -j);
    CHECK(qmul(i, i) == -one);
    CHECK(qmul(j, j) == -one);
    CHECK(qmul(k, k) == -one);
    CHECK(qmul(qmul(i, j), k) == -one);
    Quaternion q{7, -2, 9, 1};
    CHECK(qmul(one, q) == q);
    Quaternion q0 = seq_quaternion(QuatSeqKind::Q, 0);
    CHECK(qmul(q0, q0) == Quaternion{-6, 0, 0, 0});
}

TEST_CASE("conjugate, norm and inverse") {
    Quaternion q0 = seq_quaternion(QuatSeqKind::Q, 0);
    CHECK(qconj(Quaternion{1}) == Quaternion{1});
    CHECK(qconj(q0) == Quaternion{0, -1, -1, -2});
    CHECK(qnorm(Quaternion{}) == 0);
    CHECK(qnorm(q0) == 6);
    // 7^2 + 13^2 + 24^2 + 44^2
    CHECK(qnorm(seq_quaternion(QuatSeqKind::Q, 5)) == 2730);

    CHECK(qinv(Quaternion{1}) == RationalQuaternion{Quaternion{1}, 1});
    CHECK(qinv(Quaternion::unit_i()) == RationalQuaternion{Quaternion{0, -1, 0, 0}, 1});
    CHECK(qinv(q0) == RationalQuaternion{Quaternion{0, -1, -1, -2}, 6});
    CHECK_THROWS_AS(qinv(Quaternion{}), DivisionByZero);
    auto inv = qinv(q0);
    CHECK(qmul(q0, inv.numerator) == Quaternion{inv.denominator});
}

TEST_CASE("complex-pair product") {
    CHECK(cd_mul(Quaternion::unit_i(), Quaternion::unit_j()) == Quaternion::unit_k());
    CHECK(cd_mul(Quaternion::unit_j(), Quaternion::unit_j()) == Quaternion{-1});
    CHECK(cd_mul(Quaternion::unit_j(), Quaternion::unit_k()) == Quaternion::unit_i());
    Quaternion q1 = seq_quaternion(QuatSeqKind::Q, 1), q2 = seq_quaternion(QuatSeqKind::Q, 2);
    CHECK(cd_mul(q1, q2) == qmul(q1, q2));
}

TEST_CASE("random pairs: multiplicative norm, conjugate reversal, complex-pair agreement") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
        Quaternion p = random_quaternion(rng, 1000000), q = random_quaternion(rng, 1000000);
        Quaternion pq = qmul(p, q);
        CHECK(qnorm(pq) == qnorm(p) * qnorm(q));
        CHECK(qconj(pq) == qmul(qconj(q), qconj(p)));
        CHECK(cd_mul(p, q) == pq);
        CHECK(qconj(qconj(p)) == p);
        CHECK(qconj(p + q) == qconj(p) + qconj(q));
        Quaternion n = qmul(p, qconj(p));
        CHECK(n == Quaternion{qnorm(p)});
    }
}

TEST_CASE("sequence quaternions") {
    CHECK(seq_quaternion(QuatSeqKind::Q, 5) == Quaternion{7, 13, 24, 44});
    CHECK(seq_quaternion(QuatSeqKind::Qtilde, 2) == Quaternion{3, 7, 11, 21});
    CHECK(seq_quaternion(QuatSeqKind::Q, -1) == Quaternion{0, 0, 1, 1});
    CHECK(seq_quaternion(QuatSeqKind::Utilde, 0) == Quaternion{0, 0, 1, 2});
    CHECK(seq_quaternion(QuatSeqKind::Cunder, 0) == Quaternion{3, 1, 3, 7});
    CHECK_THROWS_AS(seq_quaternion(QuatSeqKind::Rtilde, -1), DomainError);
    CHECK_THROWS_AS(seq_quaternion(QuatSeqKind::Utilde, -1), DomainError);

    // Negative subscripts: Q_{-n} = A_n + i A_{n-1} + j A_{n-2} + k A_{n-3} with A_n = T_{-n}.
    for (Index n = 3; n < 40; ++n) {
        CHECK(seq_quaternion(QuatSeqKind::Q, -n) ==
              Quaternion{tribonacci(-n), tribonacci(-(n - 1)), tribonacci(-(n - 2)), tribonacci(-(n - 3))});
    }
}

TEST_CASE("sequence quaternion recurrences and positive norms") {
    for (Index n = -40; n <= 150; ++n) {
        for (QuatSeqKind k : {QuatSeqKind::Q, QuatSeqKind::Qtilde}) {
            CHECK(seq_quaternion(k, n + 3) == seq_quaternion(k, n + 2) + seq_quaternion(k, n + 1) + seq_quaternion(k, n));
        }
        CHECK(qnorm(seq_quaternion(QuatSeqKind::Q, n)) > 0);
    }
    for (Index n = 0; n <= 150; ++n) {
        CHECK(seq_quaternion(QuatSeqKind::Rtilde, n + 3) == seq_quaternion(QuatSeqKind::Rtilde, n + 2) +
                                                                 seq_quaternion(QuatSeqKind::Rtilde, n + 1) +
                                                                 seq_quaternion(QuatSeqKind::Rtilde, n));
    }
    // U_0 = U_1 = 0 breaks the recurrence exactly once, at n = 0.
    for (Index n = 1; n <= 150; ++n) {
        CHECK(seq_quaternion(QuatSeqKind::Utilde, n + 3) == seq_quaternion(QuatSeqKind::Utilde, n + 2) +
                                                                 seq_quaternion(QuatSeqKind::Utilde, n + 1) +
                                                                 seq_quaternion(QuatSeqKind::Utilde, n));
    }
    CHECK_FALSE(seq_quaternion(QuatSeqKind::Utilde, 3) == seq_quaternion(QuatSeqKind::Utilde, 2) +
                                                             seq_quaternion(QuatSeqKind::Utilde, 1) +
                                                             seq_quaternion(QuatSeqKind::Utilde, 0));
}

TEST_CASE("progression sums") {
    CHECK(q_progression_sum(QuatSeqKind::Q, 0, 1, 1) == Quaternion{0, 1, 1, 2});
    CHECK(q_progression_sum(QuatSeqKind::Q, 0, 1, 4) == Quaternion{4, 8, 14, 26});
    CHECK(q_progression_sum(QuatSeqKind::Utilde, 0, 3, 1) == Quaternion{0, 0, 1, 2});
    CHECK(q_progression_sum(QuatSeqKind::Q, 5, 2, 0).is_zero());
    CHECK_THROWS_AS(q_progression_sum(QuatSeqKind::Utilde, -3, 1, 2), DomainError);
    CHECK_THROWS(q_progression_sum(QuatSeqKind::Q, 0, 0, 2));
    for (QuatSeqKind k : {QuatSeqKind::Q, QuatSeqKind::Qtilde, QuatSeqKind::Rtilde, QuatSeqKind::Utilde}) {
        Index s = domain_min(k) == 0 ? 0 : -10;
        for (Index c = 0; c < 40; ++c) {
            CHECK(q_progression_sum(k, s, 1, c + 1) == q_progression_sum(k, s, 1, c) + seq_quaternion(k, s + c));
        }
    }
}

TEST_CASE("display form") {
    CHECK(to_display(seq_quaternion(QuatSeqKind::Q, 5)) == "7 + 13 i + 24 j + 44 k");
    CHECK(to_display(seq_quaternion(QuatSeqKind::Qtilde, 0)) == "3 + 1 i + 3 j + 7 k");
    CHECK(to_display(seq_quaternion(QuatSeqKind::Q, -1)) == "0 + 0 i + 1 j + 1 k");
    CHECK(to_display(Quaternion{-1, -2, 0, 3}) == "-1 - 2 i + 0 j + 3 k");
}
