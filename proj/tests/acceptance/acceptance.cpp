// One line per acceptance criterion; exit status is nonzero if any criterion fails.

#include "tribq/audit.hpp"
#include "tribq/binet.hpp"
#include "tribq/cli.hpp"
#include "tribq/matrices.hpp"
#include "tribq/report.hpp"
#include "tribq/series.hpp"

#include "direct_expansion.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace tribq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int number, const std::string& title, bool ok, double secs, const std::string& detail) {
    std::cout << "[" << (ok ? "PASS" : "FAIL") << "] " << number << ". " << title << " (" << std::fixed
              << std::setprecision(3) << secs << " s) " << detail << '\n';
    if (!ok) ++failures;
}

void info(const std::string& text) { std::cout << "       info: " << text << '\n'; }

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void table_reproduction() {
    const long t[] = {0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927};
    const long k[] = {3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443, 815, 1499, 2757};
    auto t0 = Clock::now();
    int matched = 0;
    for (const auto& [kind, expected] : {std::pair{"T", t}, std::pair{"K", k}}) {
        std::ostringstream out, err;
        if (run_cli({"seq", kind, "0", "13", "--format", "csv"}, out, err) != kExitOk) continue;
        std::istringstream lines(out.str());
        std::string line;
        std::getline(lines, line);
        for (int n = 0; n <= 13 && std::getline(lines, line); ++n) {
            if (line == std::to_string(n) + "," + std::to_string(expected[n])) ++matched;
        }
    }
    double secs = seconds_since(t0);
    report(1, "table reproduction", matched == 28 && secs < 1.0, secs, std::to_string(matched) + "/28 values");
}

void generating_functions() {
    auto t0 = Clock::now();
    int bad = 0;
    auto f = expand_scalar(builtin_series("f"), 64);
    auto h = expand_scalar(builtin_series("h"), 64);
    auto g = expand(builtin_series("G"), 64);
    auto nt = expand_scalar(builtin_series("normT"), 64);
    for (Index n = 0; n < 64; ++n) {
        auto i = static_cast<std::size_t>(n);
        Quaternion q = seq_quaternion(QuatSeqKind::Q, n);
        bad += f[i] != tribonacci(n);
        bad += h[i] != tribonacci_lucas(n);
        bad += !(g[i] == q);
        bad += nt[i] != qnorm(q);
    }
    bool factored = poly_multiply({1, -3, -1, -1}, {1, 1, 1, -1}) == builtin_series("normT").denominator;
    double secs = seconds_since(t0);
    report(2, "generating functions f, h, G, normT", bad == 0 && factored && secs < 1.0, secs,
           std::to_string(256 - bad) + "/256 coefficients exact");
}

void binet_round_trip() {
    auto t0 = Clock::now();
    int bad = 0;
    long checked = 0;
    double worst = 0;
    for (Index n = -300; n <= 300; ++n) {
        int bits = policy_precision(n);
        Roots roots = compute_roots(bits);
        BigFloat tol = BigFloat(1, bits) / BigFloat(1000000, bits);
        try {
            for (SequenceKind k : {SequenceKind::T, SequenceKind::K}) {
                ScalarBinet b = binet_scalar(k, n, roots);
                bad += b.rounded != derived_scalar(k, n) || !(b.residue < tol);
                worst = std::max(worst, b.residue.to_double());
                ++checked;
            }
            for (QuatSeqKind k : {QuatSeqKind::Q, QuatSeqKind::Qtilde}) {
                QuaternionBinet b = binet_quaternion(k, n, roots);
                bad += !(b.rounded == seq_quaternion(k, n)) || !(b.residue < tol);
                worst = std::max(worst, b.residue.to_double());
                ++checked;
            }
        } catch (const std::exception&) {
            ++bad;
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << checked - bad << "/" << checked << " evaluations exact, worst residue " << std::scientific
      << std::setprecision(2) << worst;
    report(3, "Binet round trip on [-300, 300]", bad == 0 && secs < 30.0, secs, d.str());
}

void fast_path() {
    auto t0 = Clock::now();
    int bad = 0;
    for (Index n = -2000; n <= 2000; ++n) {
        bad += fast_seq(SequenceKind::T, n) != tribonacci_uncached(n);
        bad += fast_seq(SequenceKind::K, n) != tribonacci_lucas_uncached(n);
    }
    double agree_secs = seconds_since(t0);

    const Index big = 100000;
    auto t1 = Clock::now();
    BigInt v = fast_seq(SequenceKind::T, big);
    std::size_t digits = decimal_digits(v);
    double big_secs = seconds_since(t1);

    BigFloat alpha = compute_roots(128).alpha.re;
    double predicted = static_cast<double>(big) * log10(alpha).to_double();
    bool digits_ok = std::fabs(static_cast<double>(digits) - predicted) <= 1.0;
    std::ostringstream d;
    d << "agreement " << (bad == 0 ? "exact" : std::to_string(bad) + " mismatches") << " for |n| <= 2000; T_100000 has "
      << digits << " digits, n*log10(alpha) = " << std::fixed << std::setprecision(2) << predicted << ", "
      << std::setprecision(3) << big_secs << " s";
    report(4, "companion-matrix fast path", bad == 0 && digits_ok && big_secs < 5.0, agree_secs + big_secs, d.str());
    info("0.2646*100000 = 26460 truncates log10(alpha) = 0.264649...; the digit check uses the untruncated product");
}

void representation() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(500);
    std::uniform_int_distribution<long> d(-10000, 10000);
    int bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Quaternion p{d(rng), d(rng), d(rng), d(rng)}, q{d(rng), d(rng), d(rng), d(rng)};
        bad += !(phi(p + q) == phi(p) + phi(q));
        bad += !(phi(p * q) == phi(p) * phi(q));
        bad += !(det2(phi(q)) == GaussInt{qnorm(q), 0});
        bad += !(phi(qconj(q)) == conj_transpose(phi(q)));
        bad += !(phi_inverse(phi(q)) == q);
    }
    const Mat2C e = basis_E(), i = basis_I(), j = basis_J(), k = basis_K();
    bool basis = i * i == -e && j * j == -e && k * k == -e && i * j == k && j * k == i && k * i == j;
    double secs = seconds_since(t0);
    report(5, "2x2 complex representation", bad == 0 && basis && secs < 5.0, secs,
           std::to_string(2500 - bad) + "/2500 property checks, basis relations " + (basis ? "hold" : "fail"));
}

void audit_agreement() {
    auto t0 = Clock::now();
    int disagreements = 0;
    for (const auto& c : catalog()) {
        std::vector<IndexRange> grid;
        std::vector<std::int64_t> lo, hi;
        for (const auto& m : c.min) {
            grid.push_back({m ? *m : kNegativeFloor, 25});
            lo.push_back(grid.back().lo);
            hi.push_back(25);
        }
        VerdictReport r = check_identity(c.id, grid);
        oracle::Verdict o = oracle::check(c.id, lo, hi);
        bool same = (r.status == Status::pass) == o.pass && r.counterexample_count == o.failures.size() &&
                    r.counterexamples.size() == std::min(o.failures.size(), kCounterexampleCap);
        for (std::size_t n = 0; same && n < r.counterexamples.size(); ++n) {
            const auto& a = r.counterexamples[n];
            const auto& b = o.failures[n];
            same = a.indices == b.indices && a.lhs.a0 == b.lhs.w && a.lhs.a1 == b.lhs.v[0] && a.lhs.a2 == b.lhs.v[1] &&
                   a.lhs.a3 == b.lhs.v[2] && a.rhs.a0 == b.rhs.w && a.rhs.a1 == b.rhs.v[0] &&
                   a.rhs.a2 == b.rhs.v[1] && a.rhs.a3 == b.rhs.v[2];
        }
        if (!same) {
            ++disagreements;
            info("checker and oracle disagree on " + c.id);
        }
    }
    double agree_secs = seconds_since(t0);

    auto t1 = Clock::now();
    AuditResult full = run_audit();
    double audit_secs = seconds_since(t1);

    const std::set<std::string> expected_fail{"I5", "I6.3a", "I6.3b"};
    int passing = 0;
    for (const auto& r : full.reports) {
        bool pass = r.status == Status::pass;
        passing += pass;
        bool expected_pass = !expected_fail.count(r.id);
        if (pass != expected_pass) {
            std::ostringstream s;
            s << r.id << " expected " << (expected_pass ? "pass" : "fail") << " but is " << (pass ? "pass" : "fail");
            if (r.minimal_counterexample) {
                s << " (" << r.counterexample_count << " counterexamples, minimal at";
                for (Index v : *r.minimal_counterexample) s << ' ' << v;
                s << ')';
            }
            info(s.str());
        } else if (!pass && r.minimal_counterexample) {
            info(r.id + " fails as expected, minimal counterexample at n = " +
                 std::to_string(r.minimal_counterexample->front()));
        }
    }
    std::ostringstream d;
    d << (catalog().size() - static_cast<std::size_t>(disagreements)) << "/" << catalog().size()
      << " ids agree with the oracle; full audit " << passing << "/" << full.reports.size() << " pass in "
      << std::fixed << std::setprecision(3) << audit_secs << " s";
    report(6, "identity audit agrees with the oracle", disagreements == 0 && audit_secs < 60.0,
           agree_secs + audit_secs, d.str());
}

void determinism() {
    auto t0 = Clock::now();
    auto dir = std::filesystem::temp_directory_path();
    auto a = dir / "tribq_acceptance_a.json";
    auto b = dir / "tribq_acceptance_b.json";
    std::ostringstream out, err;
    run_cli({"audit", "--no-timestamps", "--out", a.string()}, out, err);
    run_cli({"audit", "--no-timestamps", "--out", b.string()}, out, err);
    std::string ja = read_file(a), jb = read_file(b);
    bool ok = !ja.empty() && ja == jb;
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    double secs = seconds_since(t0);
    report(7, "deterministic audit report", ok, secs,
           std::to_string(ja.size()) + " bytes, " + (ok ? "byte-identical" : "differs"));
}

}  // namespace

int main() {
    table_reproduction();
    generating_functions();
    binet_round_trip();
    fast_path();
    representation();
    audit_agreement();
    determinism();
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << '\n';
    return failures == 0 ? 0 : 1;
}
