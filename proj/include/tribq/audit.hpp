#pragma once

/**
 * @file audit.hpp
 * @brief Catalog of Tribonacci-quaternion identities and an exhaustive exact
 *        checker over bounded index grids.
 *
 * Every identity is stated as lhs == rhs_1 == ... == rhs_k with integer
 * quaternion members. Statements involving a division are cross-multiplied,
 * so 2 * sum == numerator rather than sum == numerator / 2.
 */

#include "tribq/quaternion.hpp"
#include "tribq/seqcore.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tribq {

struct IndexRange {
    Index lo = 0;
    Index hi = 0;

    bool empty() const { return lo > hi; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Value of each side at one grid point. The point passes iff every chain member equals lhs.
struct Evaluation {
    Quaternion lhs;
    std::vector<Quaternion> chain;
};

struct IdentityCase {
    std::string id;
    std::vector<std::string> vars;          ///< {"n"} or {"m", "n"}
    std::vector<std::optional<Index>> min;  ///< per-variable lower bound; nullopt = all integers
    std::string domain;                     ///< e.g. "m>=3, n>=0"
    std::string description;
    std::string paper_ref;
    std::function<Evaluation(std::span<const Index>)> evaluate;

    std::size_t arity() const { return vars.size(); }
    bool in_domain(std::span<const Index> point) const;
};

/// Lower bound used for variables ranging over all integers.
constexpr Index kNegativeFloor = -25;

/// All identities in a fixed order. Built once; safe to share across threads.
const std::vector<IdentityCase>& catalog();

/// Throws UnknownName.
const IdentityCase& find_identity(const std::string& id);

struct Counterexample {
    std::vector<Index> indices;
    Quaternion lhs;
    Quaternion rhs;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

enum class Status { pass, fail };

struct VerdictReport {
    std::string id;
    std::string paper_ref;
    std::string domain;
    std::vector<std::string> vars;
    std::vector<IndexRange> checked;
    Status status = Status::pass;
    std::uint64_t counterexample_count = 0;
    /// Lexicographically smallest failures, at most kCounterexampleCap.
    std::vector<Counterexample> counterexamples;
    std::optional<std::vector<Index>> minimal_counterexample;
    std::int64_t elapsed_ms = 0;
};

constexpr std::size_t kCounterexampleCap = 16;

struct CheckOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Evaluates the identity at every grid point of `bounds` (one range per
/// variable) clipped to the identity's domain. Throws UnknownName for an unknown
/// id, std::invalid_argument for a wrong number of ranges and DomainError when
/// the clipped grid is empty.
VerdictReport check_identity(const std::string& id, const std::vector<IndexRange>& bounds,
                             const CheckOptions& options = {});

struct AuditProfile {
    Index max_n = 200;  ///< single-variable identities
    Index max_m = 50;   ///< two-variable identities, both variables
    std::vector<std::string> ids;  ///< empty = whole catalog
    CheckOptions check;
};

/// Default grid for one identity under the profile: [lower bound, max] per variable.
std::vector<IndexRange> default_bounds(const IdentityCase& identity, const AuditProfile& profile);

struct AuditResult {
    std::vector<VerdictReport> reports;  ///< ordered by id
    std::vector<std::string> notes;
};

AuditResult run_audit(const AuditProfile& profile = {});

/// Least in-domain point with lhs != rhs, searching each variable over
/// [lower bound, search_bound].
std::optional<std::vector<Index>> minimal_counterexample(const std::string& id, Index search_bound);

/// Natural order on ids: "I7.2" < "I7.10".
bool id_less(const std::string& a, const std::string& b);

/// Findings about the 2x2 matrix basis, computed rather than asserted.
std::vector<std::string> basis_notes();

}  // namespace tribq
