#include "tribq/audit.hpp"
#include "tribq/errors.hpp"
#include "tribq/report.hpp"

#include "direct_expansion.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace tribq;

namespace {

bool same(const Quaternion& q, const oracle::Quat& o) {
    return q.a0 == o.w && q.a1 == o.v[0] && q.a2 == o.v[1] && q.a3 == o.v[2];
}

std::vector<IndexRange> oracle_grid(const IdentityCase& c, Index hi) {
    std::vector<IndexRange> r;
    for (const auto& m : c.min) r.push_back({m ? *m : kNegativeFloor, hi});
    return r;
}

}  // namespace

TEST_CASE("catalog ids are unique and known to the oracle") {
    std::set<std::string> ids;
    for (const auto& c : catalog()) {
        CHECK(ids.insert(c.id).second);
        CHECK(c.vars.size() == c.min.size());
        CHECK_FALSE(c.paper_ref.empty());
    }
    auto known = oracle::known_ids();
    CHECK(std::set<std::string>(known.begin(), known.end()) == ids);
    CHECK(catalog().size() == 28);
}

TEST_CASE("checker agrees with the direct-expansion oracle on every id") {
    for (const auto& c : catalog()) {
        CAPTURE(c.id);
        auto grid = oracle_grid(c, 25);
        VerdictReport r = check_identity(c.id, grid, {2});
        std::vector<std::int64_t> lo, hi;
        for (const auto& g : grid) {
            lo.push_back(g.lo);
            hi.push_back(g.hi);
        }
        oracle::Verdict o = oracle::check(c.id, lo, hi);
        CHECK((r.status == Status::pass) == o.pass);
        CHECK(r.counterexample_count == o.failures.size());
        std::size_t shown = std::min(o.failures.size(), kCounterexampleCap);
        REQUIRE(r.counterexamples.size() == shown);
        for (std::size_t k = 0; k < shown; ++k) {
            CHECK(r.counterexamples[k].indices == o.failures[k].indices);
            CHECK(same(r.counterexamples[k].lhs, o.failures[k].lhs));
            CHECK(same(r.counterexamples[k].rhs, o.failures[k].rhs));
        }
        if (o.failures.empty()) {
            CHECK_FALSE(r.minimal_counterexample.has_value());
        } else {
            REQUIRE(r.minimal_counterexample.has_value());
            CHECK(*r.minimal_counterexample == o.failures.front().indices);
        }
    }
}

TEST_CASE("oracle sequences match the library") {
    for (Index n = -100; n <= 100; ++n) {
        CHECK(oracle::trib(n) == tribonacci(n));
        CHECK(oracle::lucas(n) == tribonacci_lucas(n));
    }
}

TEST_CASE("single-thread and multi-thread scans agree") {
    for (const char* id : {"I2.3", "I5", "I7.4", "X1"}) {
        const auto& c = find_identity(id);
        auto grid = oracle_grid(c, 30);
        VerdictReport a = check_identity(id, grid, {1});
        VerdictReport b = check_identity(id, grid, {7});
        CHECK(a.status == b.status);
        CHECK(a.counterexample_count == b.counterexample_count);
        CHECK(a.counterexamples == b.counterexamples);
    }
}

TEST_CASE("known verdicts") {
    CHECK(check_identity("I1.2", {{0, 40}}).status == Status::pass);
    CHECK(check_identity("I3", {{3, 20}, {0, 20}}).status == Status::pass);
    CHECK_FALSE(minimal_counterexample("I1.2", 40).has_value());
    CHECK_FALSE(minimal_counterexample("I3", 20).has_value());

    auto m = minimal_counterexample("I6.3a", 50);
    REQUIRE(m.has_value());
    CHECK(*m == std::vector<Index>{2});

    VerdictReport i5 = check_identity("I5", {{0, 40}});
    CHECK(i5.status == Status::fail);
    REQUIRE(i5.minimal_counterexample.has_value());
    CHECK(i5.minimal_counterexample->front() <= 3);
}

TEST_CASE("evaluation at a worked example") {
    // Qtilde_2 = (3, 7, 11, 21) appears on the left of I1.3 at n = 2.
    const auto& c = find_identity("I1.3");
    Index n = 2;
    Evaluation e = c.evaluate(std::span<const Index>(&n, 1));
    CHECK(seq_quaternion(QuatSeqKind::Qtilde, 2) == Quaternion{3, 7, 11, 21});
    for (const auto& member : e.chain) CHECK(member == e.lhs);
}

TEST_CASE("restatements also hold at negative subscripts") {
    std::mt19937_64 rng(30);
    std::uniform_int_distribution<Index> d(-30, -1);
    for (const char* id : {"I1.1", "I1.2", "I1.3"}) {
        const auto& c = find_identity(id);
        for (int trial = 0; trial < 20; ++trial) {
            Index n = d(rng);
            CAPTURE(n);
            Evaluation e = c.evaluate(std::span<const Index>(&n, 1));
            for (const auto& member : e.chain) CHECK(member == e.lhs);
        }
    }
    // N1 rests on N(Q_n) = T_n^2 + T_{n+1}^2 + T_{n+2}^2 + T_{n+3}^2.
    for (int trial = 0; trial < 20; ++trial) {
        Index n = d(rng);
        BigInt squares = 0;
        for (Index k = 0; k < 4; ++k) squares += tribonacci(n + k) * tribonacci(n + k);
        CHECK(qnorm(seq_quaternion(QuatSeqKind::Q, n)) == squares);
    }
    CHECK(check_identity("N1", {{0, 60}}).status == Status::pass);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(find_identity("I99"), UnknownName);
    CHECK_THROWS_AS(check_identity("I99", {{0, 3}}), UnknownName);
    CHECK_THROWS_AS(check_identity("I1.1", {{5, 2}}), DomainError);
    CHECK_THROWS_AS(check_identity("I4.1", {{0, 3}}), DomainError);
    CHECK_THROWS_AS(check_identity("I1.1", {{0, 3}, {0, 3}}), std::invalid_argument);
}

TEST_CASE("natural id order") {
    CHECK(id_less("I7.2", "I7.10"));
    CHECK(id_less("I6.3a", "I6.3b"));
    CHECK(id_less("I1.3", "I2.1"));
    CHECK_FALSE(id_less("I7.10", "I7.2"));
    std::vector<std::string> ids;
    for (const auto& c : catalog()) ids.push_back(c.id);
    CHECK(std::is_sorted(ids.begin(), ids.end(), id_less));
}

TEST_CASE("reports serialize deterministically without timestamps") {
    AuditProfile p;
    p.max_n = 40;
    p.max_m = 12;
    std::string a = serialize(audit_to_json(run_audit(p), p, {false}));
    p.check.threads = 1;
    std::string b = serialize(audit_to_json(run_audit(p), p, {false}));
    CHECK(a == b);
    CHECK(a.find("generated_at") == std::string::npos);
    auto j = nlohmann::json::parse(a);
    CHECK(j["version"] == 1);
    CHECK(j["results"].size() == 28);
    CHECK(serialize(audit_to_json(run_audit(p), p, {true})).find("generated_at") != std::string::npos);
}

TEST_CASE("basis notes record the corrected K") {
    auto notes = basis_notes();
    REQUIRE_FALSE(notes.empty());
    bool mentions_k = false;
    for (const auto& n : notes) mentions_k = mentions_k || n.find("K") != std::string::npos;
    CHECK(mentions_k);
}

TEST_CASE("quaternion json round trip") {
    Quaternion q{BigInt("-123456789012345678901234567890"), 0, 7, -1};
    CHECK(quaternion_from_json(to_json(q)) == q);
    CHECK_THROWS_AS(quaternion_from_json(nlohmann::json{{"a0", "1"}}), std::invalid_argument);
    CHECK_THROWS_AS(quaternion_from_json(nlohmann::json{{"a0", "x"}, {"a1", "0"}, {"a2", "0"}, {"a3", "0"}}),
                    std::invalid_argument);
}
