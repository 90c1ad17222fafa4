#include "tribq/audit.hpp"

#include "tribq/errors.hpp"
#include "tribq/series.hpp"

namespace tribq {

namespace {

Quaternion Q(Index n) { return seq_quaternion(QuatSeqKind::Q, n); }
Quaternion Qt(Index n) { return seq_quaternion(QuatSeqKind::Qtilde, n); }
Quaternion Rt(Index n) { return seq_quaternion(QuatSeqKind::Rtilde, n); }
Quaternion Ut(Index n) { return seq_quaternion(QuatSeqKind::Utilde, n); }
Quaternion Cu(Index n) { return seq_quaternion(QuatSeqKind::Cunder, n); }
BigInt T(Index n) { return tribonacci(n); }
BigInt K(Index n) { return tribonacci_lucas(n); }
BigInt C(Index n) { return derived_scalar(SequenceKind::C, n); }
BigInt S(Index m) { return derived_scalar(SequenceKind::S, m); }
/// Q_0 + ... + Q_n
Quaternion Shat(Index n) { return q_progression_sum(QuatSeqKind::Q, 0, 1, n + 1); }
Quaternion sq(const Quaternion& q) { return q * q; }
Quaternion scalar(BigInt v) { return Quaternion{std::move(v)}; }
const BigInt two = 2;

Evaluation eq(Quaternion lhs, Quaternion rhs) { return {std::move(lhs), {std::move(rhs)}}; }

using Point = std::span<const Index>;

IdentityCase unary(std::string id, std::optional<Index> min, std::string description, std::string ref,
                   std::function<Evaluation(Index)> f) {
    std::string domain = min ? "n>=" + std::to_string(*min) : "n any integer";
    return {std::move(id), {"n"},        {min}, std::move(domain), std::move(description), std::move(ref),
            [f = std::move(f)](Point p) { return f(p[0]); }};
}

IdentityCase binary(std::string id, std::optional<Index> min_m, std::optional<Index> min_n, std::string description,
                    std::string ref, std::function<Evaluation(Index, Index)> f) {
    auto part = [](const char* var, std::optional<Index> lo) {
        return lo ? std::string(var) + ">=" + std::to_string(*lo) : std::string(var) + " any integer";
    };
    std::string domain = part("m", min_m) + ", " + part("n", min_n);
    return {std::move(id),
            {"m", "n"},
            {min_m, min_n},
            std::move(domain),
            std::move(description),
            std::move(ref),
            [f = std::move(f)](Point p) { return f(p[0], p[1]); }};
}

// C_j through the symmetric functions of alpha^j, beta^j, gamma^j:
// e2 = (p1^2 - p2) / 2 with p1 = K_j and p2 = K_2j. Independent of C_j = K_-j.
BigInt c_from_power_sums(Index j) {
    BigInt k = K(j);
    BigInt twice = k * k - K(2 * j);
    return twice / 2;
}

std::vector<IdentityCase> build() {
    std::vector<IdentityCase> c;
    const std::optional<Index> any;

    c.push_back(unary("I1.1", 0, "Q_n^2 = 2 T_n Q_n - Q_n Q_n*", "Identities 1, first statement",
                      [](Index n) {
                          Quaternion q = Q(n);
                          return eq(sq(q), two * T(n) * q - q * qconj(q));
                      }));
    c.push_back(unary("I1.2", 0, "Q_n + Q_n* = 2 T_n", "Identities 1, second statement", [](Index n) {
        Quaternion q = Q(n);
        return eq(q + qconj(q), scalar(two * T(n)));
    }));
    c.push_back(unary("I1.3", any, "Qtilde_n = Q_n + 2 Q_{n-1} + 3 Q_{n-2}", "Identities 1, third statement",
                      [](Index n) { return eq(Qt(n), Q(n) + two * Q(n - 1) + BigInt(3) * Q(n - 2)); }));

    c.push_back(binary("I2.1", any, any, "Q_{m+n} = Q_m K_n - Q_{m-n} C_n + Q_{m-2n}",
                       "Identities 2, first statement", [](Index m, Index n) {
                           return eq(Q(m + n), Q(m) * K(n) - Q(m - n) * C(n) + Q(m - 2 * n));
                       }));
    c.push_back(binary("I2.2", any, any, "Qtilde_{m+n} = Qtilde_m K_n - Qtilde_{m-n} C_n + Cunder_{2n-m}",
                       "Identities 2, second statement", [](Index m, Index n) {
                           return eq(Qt(m + n), Qt(m) * K(n) - Qt(m - n) * C(n) + Cu(2 * n - m));
                       }));
    c.push_back(binary("I2.3", any, any, "Q_{n+2m} = K_m Q_{n+m} - K_{-m} Q_n + Q_{n-2m}",
                       "Identities 2, third statement", [](Index m, Index n) {
                           return eq(Q(n + 2 * m), K(m) * Q(n + m) - K(-m) * Q(n) + Q(n - 2 * m));
                       }));

    c.push_back(binary("I3", 3, 0, "Q_{n+m} = T_{m-2} Q_n + (T_{m-3} + T_{m-2}) Q_{n+1} + T_{m-1} Q_{n+2}",
                       "Identity 3", [](Index m, Index n) {
                           return eq(Q(n + m),
                                     T(m - 2) * Q(n) + BigInt(T(m - 3) + T(m - 2)) * Q(n + 1) + T(m - 1) * Q(n + 2));
                       }));

    c.push_back(unary("I4.1", 4, "2 Q_n = Shat_n - Shat_{n-4}, Shat_n = Q_0 + ... + Q_n",
                      "Identities 4, first statement",
                      [](Index n) { return eq(two * Q(n), Shat(n) - Shat(n - 4)); }));
    c.push_back(binary("I4.2", 5, 0,
                       "Shat_{n+m} = -S_{m-3} Shat_n - S_{m-4} Shat_{n+1} - S_{m-5} Shat_{n+2} + S_{m-2} Shat_{n+3}",
                       "Identities 4, second statement", [](Index m, Index n) {
                           return eq(Shat(n + m), S(m - 2) * Shat(n + 3) - S(m - 3) * Shat(n) -
                                                      S(m - 4) * Shat(n + 1) - S(m - 5) * Shat(n + 2));
                       }));

    c.push_back(unary("I5", 0,
                      "(Q_n Q_{n+4})^2 + (2 (Q_{n+1} + Q_{n+2}) Q_{n+3})^2 = (Q_n^2 + 2 (Q_{n+1} + Q_{n+2}) Q_{n+3})^2",
                      "Identity 5", [](Index n) {
                          Quaternion cross = two * ((Q(n + 1) + Q(n + 2)) * Q(n + 3));
                          return eq(sq(Q(n) * Q(n + 4)) + sq(cross), sq(sq(Q(n)) + cross));
                      }));

    c.push_back(unary("I6.1", 0, "Rtilde_{n+3} = Rtilde_{n+2} + Rtilde_{n+1} + Rtilde_n, R_n = 3 T_{n+1} - T_n",
                      "Identities 6, Rtilde recurrence",
                      [](Index n) { return eq(Rt(n + 3), Rt(n + 2) + Rt(n + 1) + Rt(n)); }));
    c.push_back(unary("I6.2", 0,
                      "Utilde_{n+3} = Utilde_{n+2} + Utilde_{n+1} + Utilde_n, U_n = T_{n-1} + T_{n-2}, U_0 = U_1 = 0",
                      "Identities 6, Utilde recurrence",
                      [](Index n) { return eq(Ut(n + 3), Ut(n + 2) + Ut(n + 1) + Ut(n)); }));
    c.push_back(unary("I6.3a", 2, "Q_n^2 - Q_{n-1}^2 = Utilde_{n+1} Utilde_{n-1}",
                      "Identities 6, difference of squares (printed order)",
                      [](Index n) { return eq(sq(Q(n)) - sq(Q(n - 1)), Ut(n + 1) * Ut(n - 1)); }));
    c.push_back(unary("I6.3b", 2, "Q_n^2 - Q_{n-1}^2 = Utilde_{n-1} Utilde_{n+1}",
                      "Identities 6, difference of squares (reversed order)",
                      [](Index n) { return eq(sq(Q(n)) - sq(Q(n - 1)), Ut(n - 1) * Ut(n + 1)); }));
    c.push_back(unary("I6.4", 2, "Utilde_{n+1}^2 + Utilde_{n-1}^2 = 2 (Q_{n-1}^2 + Q_n^2)",
                      "Identities 6, sum of squares",
                      [](Index n) { return eq(sq(Ut(n + 1)) + sq(Ut(n - 1)), two * (sq(Q(n - 1)) + sq(Q(n)))); }));

    auto sum = [](QuatSeqKind kind, Index start, Index stride, Index n) {
        return q_progression_sum(kind, start, stride, n + 1);
    };
    using QK = QuatSeqKind;
    c.push_back(unary("I7.1", 0, "2 sum_{k=0..n} Q_k = Q_{n+2} + Q_n + Q_0 - Q_2", "Identities 7, sum 1",
                      [sum](Index n) { return eq(two * sum(QK::Q, 0, 1, n), Q(n + 2) + Q(n) + Q(0) - Q(2)); }));
    c.push_back(unary("I7.2", 0, "2 sum_{k=0..n} Q_{2k} = Q_{2n+1} + Q_{2n} - (1 + j + 2k)", "Identities 7, sum 2",
                      [sum](Index n) {
                          return eq(two * sum(QK::Q, 0, 2, n), Q(2 * n + 1) + Q(2 * n) - Quaternion{1, 0, 1, 2});
                      }));
    c.push_back(unary("I7.3", 0, "2 sum_{k=0..n} Q_{2k+1} = Q_{2n+2} + Q_{2n+1} - (i + 2j + 3k)",
                      "Identities 7, sum 3", [sum](Index n) {
                          return eq(two * sum(QK::Q, 1, 2, n), Q(2 * n + 2) + Q(2 * n + 1) - Quaternion{0, 1, 2, 3});
                      }));
    c.push_back(unary("I7.4", 0,
                      "2 sum_{k=0..n} Q_{3k} = 2 (sum_{k=0..3n-1} Q_k + Q_0) = Q_{3n+2} - Q_{3n} - (1 - i + j + k)",
                      "Identities 7, sum 4", [sum](Index n) {
                          Quaternion lhs = two * sum(QK::Q, 0, 3, n);
                          Quaternion middle = two * (q_progression_sum(QK::Q, 0, 1, 3 * n) + Q(0));
                          Quaternion right = Q(3 * n + 2) - Q(3 * n) - Quaternion{1, -1, 1, 1};
                          return Evaluation{std::move(lhs), {std::move(middle), std::move(right)}};
                      }));
    c.push_back(unary("I7.5", 0, "4 sum_{k=0..n} Q_{4k} = Q_{4n+2} + Q_{4n} - (1 - i + j + k)", "Identities 7, sum 5",
                      [sum](Index n) {
                          return eq(BigInt(4) * sum(QK::Q, 0, 4, n), Q(4 * n + 2) + Q(4 * n) - Quaternion{1, -1, 1, 1});
                      }));
    c.push_back(unary("I7.6", 0, "sum_{k=0..n} Utilde_k = Q_{n+1} - (1 + i + j + 2k)", "Identities 7, sum 6",
                      [sum](Index n) { return eq(sum(QK::Utilde, 0, 1, n), Q(n + 1) - Quaternion{1, 1, 1, 2}); }));
    c.push_back(unary("I7.7", 1, "sum_{k=1..n} Qtilde_k = 2 Utilde_{n+2} + Utilde_n - (3 + 4i + 7j + 14k)",
                      "Identities 7, sum 7", [](Index n) {
                          return eq(q_progression_sum(QK::Qtilde, 1, 1, n),
                                    two * Ut(n + 2) + Ut(n) - Quaternion{3, 4, 7, 14});
                      }));
    c.push_back(unary("I7.8", 0, "2 sum_{k=0..n} Q_k = Utilde_{n+2} + Utilde_{n+1} - (1 + i + 3j + 5k)",
                      "Identities 7, sum 8", [sum](Index n) {
                          return eq(two * sum(QK::Q, 0, 1, n), Ut(n + 2) + Ut(n + 1) - Quaternion{1, 1, 3, 5});
                      }));
    c.push_back(unary("I7.9", 0, "2 sum_{k=0..n} Rtilde_k = 3 Utilde_{n+3} + 2 Utilde_{n+2} - Utilde_{n+1} - (2 + 8i + 12j + 22k)",
                      "Identities 7, sum 9", [sum](Index n) {
                          return eq(two * sum(QK::Rtilde, 0, 1, n),
                                    BigInt(3) * Ut(n + 3) + two * Ut(n + 2) - Ut(n + 1) - Quaternion{2, 8, 12, 22});
                      }));
    c.push_back(unary("I7.10", 0, "sum_{k=0..n} Utilde_{3k} = Q_{3n} - i", "Identities 7, sum 10",
                      [sum](Index n) { return eq(sum(QK::Utilde, 0, 3, n), Q(3 * n) - Quaternion::unit_i()); }));
    c.push_back(unary("I7.11", 0, "sum_{k=0..n} Utilde_{3k+1} = Q_{3n+1} - (1 + k)", "Identities 7, sum 11",
                      [sum](Index n) { return eq(sum(QK::Utilde, 1, 3, n), Q(3 * n + 1) - Quaternion{1, 0, 0, 1}); }));

    c.push_back(unary("N1", 0, "N(Q_n) = T_n^2 + T_{n+1}^2 + T_{n+2}^2 + T_{n+3}^2 = [x^n] normT",
                      "norm series of the Tribonacci quaternion", [](Index n) {
                          BigInt squares = 0;
                          for (Index i = 0; i < 4; ++i) squares += T(n + i) * T(n + i);
                          auto coeffs = expand_scalar(builtin_series("normT"), static_cast<std::size_t>(n) + 1);
                          return Evaluation{scalar(qnorm(Q(n))), {scalar(std::move(squares)), scalar(coeffs.back())}};
                      }));

    c.push_back(binary("X1", any, any,
                       "Cunder_{2n-m} = Cunder_{2n-m} via (K_j^2 - K_{2j})/2 = Qtilde_{m-2n}",
                       "derived consistency: C_n = K_{-n}", [](Index m, Index n) {
                           Index j = 2 * n - m;
                           Quaternion symmetric{c_from_power_sums(j), c_from_power_sums(j - 1), c_from_power_sums(j - 2),
                                                c_from_power_sums(j - 3)};
                           return Evaluation{Cu(j), {std::move(symmetric), Qt(m - 2 * n)}};
                       }));
    return c;
}

}  // namespace

bool IdentityCase::in_domain(std::span<const Index> point) const {
    for (std::size_t v = 0; v < min.size() && v < point.size(); ++v) {
        if (min[v] && point[v] < *min[v]) return false;
    }
    return point.size() == vars.size();
}

const std::vector<IdentityCase>& catalog() {
    static const std::vector<IdentityCase> entries = build();
    return entries;
}

const IdentityCase& find_identity(const std::string& id) {
    for (const auto& entry : catalog()) {
        if (entry.id == id) return entry;
    }
    throw UnknownName("unknown identity id '" + id + "'");
}

}  // namespace tribq
