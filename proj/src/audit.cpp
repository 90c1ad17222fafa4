#include "tribq/audit.hpp"

#include "tribq/errors.hpp"
#include "tribq/matrices.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

namespace tribq {

namespace {

using Point = std::vector<Index>;

// Row-major enumeration of a rectangular grid: the last variable varies fastest,
// so grid order is lexicographic order.
class Grid {
public:
    explicit Grid(std::vector<IndexRange> ranges) : ranges_(std::move(ranges)) {
        size_ = 1;
        for (const auto& r : ranges_) size_ *= static_cast<std::uint64_t>(r.hi - r.lo + 1);
    }

    std::uint64_t size() const { return size_; }

    Point at(std::uint64_t flat) const {
        Point p(ranges_.size());
        for (std::size_t v = ranges_.size(); v-- > 0;) {
            auto width = static_cast<std::uint64_t>(ranges_[v].hi - ranges_[v].lo + 1);
            p[v] = ranges_[v].lo + static_cast<Index>(flat % width);
            flat /= width;
        }
        return p;
    }

private:
    std::vector<IndexRange> ranges_;
    std::uint64_t size_ = 0;
};

struct Findings {
    std::uint64_t count = 0;
    std::vector<Counterexample> smallest;
};

void keep_smallest(std::vector<Counterexample>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.indices < b.indices; });
    if (v.size() > kCounterexampleCap) v.resize(kCounterexampleCap);
}

Findings scan(const IdentityCase& identity, const Grid& grid, std::uint64_t begin, std::uint64_t step) {
    Findings out;
    for (std::uint64_t flat = begin; flat < grid.size(); flat += step) {
        Point p = grid.at(flat);
        Evaluation e = identity.evaluate(p);
        const Quaternion* mismatch = nullptr;
        for (const auto& member : e.chain) {
            if (!(member == e.lhs)) {
                mismatch = &member;
                break;
            }
        }
        if (!mismatch) continue;
        ++out.count;
        // Grid order is lexicographic, so within one stride the first finds are the smallest.
        if (out.smallest.size() < kCounterexampleCap) out.smallest.push_back({p, e.lhs, *mismatch});
    }
    return out;
}

unsigned worker_count(const CheckOptions& options, std::uint64_t points) {
    unsigned n = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(n, std::max<std::uint64_t>(points, 1)));
}

Index lower_bound_of(const IdentityCase& identity, std::size_t v) {
    return identity.min[v] ? *identity.min[v] : kNegativeFloor;
}

}  // namespace

VerdictReport check_identity(const std::string& id, const std::vector<IndexRange>& bounds, const CheckOptions& options) {
    const IdentityCase& identity = find_identity(id);
    if (bounds.size() != identity.arity()) {
        throw std::invalid_argument(id + " takes " + std::to_string(identity.arity()) + " index range(s), got " +
                                    std::to_string(bounds.size()));
    }
    auto started = std::chrono::steady_clock::now();

    VerdictReport report;
    report.id = identity.id;
    report.paper_ref = identity.paper_ref;
    report.domain = identity.domain;
    report.vars = identity.vars;
    for (std::size_t v = 0; v < bounds.size(); ++v) {
        IndexRange r = bounds[v];
        if (identity.min[v]) r.lo = std::max(r.lo, *identity.min[v]);
        if (r.empty()) {
            throw DomainError("range for " + identity.vars[v] + " in " + id + " is empty after clipping to " +
                              identity.domain);
        }
        report.checked.push_back(r);
    }

    Grid grid(report.checked);
    unsigned workers = worker_count(options, grid.size());
    std::vector<Findings> partial(workers);
    if (workers == 1) {
        partial[0] = scan(identity, grid, 0, 1);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    partial[w] = scan(identity, grid, w, workers);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    for (auto& f : partial) {
        report.counterexample_count += f.count;
        for (auto& c : f.smallest) report.counterexamples.push_back(std::move(c));
    }
    keep_smallest(report.counterexamples);
    report.status = report.counterexample_count == 0 ? Status::pass : Status::fail;
    if (!report.counterexamples.empty()) report.minimal_counterexample = report.counterexamples.front().indices;
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

std::vector<IndexRange> default_bounds(const IdentityCase& identity, const AuditProfile& profile) {
    Index hi = identity.arity() == 1 ? profile.max_n : profile.max_m;
    std::vector<IndexRange> out;
    for (std::size_t v = 0; v < identity.arity(); ++v) out.push_back({lower_bound_of(identity, v), hi});
    return out;
}

AuditResult run_audit(const AuditProfile& profile) {
    std::vector<std::string> ids = profile.ids;
    if (ids.empty()) {
        for (const auto& entry : catalog()) ids.push_back(entry.id);
    }
    std::sort(ids.begin(), ids.end(), id_less);
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    AuditResult result;
    for (const auto& id : ids) {
        const IdentityCase& identity = find_identity(id);
        result.reports.push_back(check_identity(id, default_bounds(identity, profile), profile.check));
    }
    result.notes = basis_notes();
    return result;
}

std::optional<std::vector<Index>> minimal_counterexample(const std::string& id, Index search_bound) {
    const IdentityCase& identity = find_identity(id);
    std::vector<IndexRange> ranges;
    for (std::size_t v = 0; v < identity.arity(); ++v) {
        IndexRange r{lower_bound_of(identity, v), search_bound};
        if (r.empty()) return std::nullopt;
        ranges.push_back(r);
    }
    Grid grid(ranges);
    for (std::uint64_t flat = 0; flat < grid.size(); ++flat) {
        Point p = grid.at(flat);
        Evaluation e = identity.evaluate(p);
        for (const auto& member : e.chain) {
            if (!(member == e.lhs)) return p;
        }
    }
    return std::nullopt;
}

bool id_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
            unsigned long long na = std::stoull(a.substr(i, ei - i));
            unsigned long long nb = std::stoull(b.substr(j, ej - j));
            if (na != nb) return na < nb;
            i = ei;
            j = ej;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j);
}

std::vector<std::string> basis_notes() {
    std::vector<std::string> notes;
    Mat2C printed_k{{{{GaussInt(0), GaussInt(0, -1)}, {GaussInt(0, 1), GaussInt(0)}}}};
    const Mat2C E = basis_E(), I = basis_I(), J = basis_J(), K = basis_K();
    bool corrected_ok = I * J == K && J * K == I && K * I == J && I * I == -E && J * J == -E && K * K == -E &&
                        phi(Quaternion::unit_k()) == K;
    bool printed_ok = I * J == printed_k && phi(Quaternion::unit_k()) == printed_k;
    if (corrected_ok && !printed_ok) {
        notes.push_back(
            "basis matrix K corrected: the displayed K = [[0,-i],[i,0]] gives I*J != K and disagrees with the "
            "image of k under the displayed map; K = [[0,-i],[-i,0]] satisfies I^2 = J^2 = K^2 = -E, IJ = K, "
            "JK = I, KI = J");
    } else {
        notes.push_back("basis matrix check inconclusive: corrected K relations " +
                        std::string(corrected_ok ? "hold" : "fail") + ", displayed K relations " +
                        std::string(printed_ok ? "hold" : "fail"));
    }
    notes.push_back("identities stated with a division are checked cross-multiplied (e.g. 2*sum = numerator)");
    notes.push_back("I7.6 and I7.7 sum Utilde_k and Qtilde_k over the running index k");
    return notes;
}

}  // namespace tribq
