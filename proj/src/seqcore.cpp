#include "tribq/seqcore.hpp"

#include "tribq/errors.hpp"

#include <array>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace tribq {

BigInt parse_decimal(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("not a decimal integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
    return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

std::size_t decimal_digits(const BigInt& v) {
    if (v == 0) return 1;
    BigInt a = abs(v);
    return a.get_str(10).size();
}

namespace {

// Values with |n| below this are memoized; larger indices roll forward from the edge.
constexpr Index kCacheWindow = 1 << 14;

class RecurrenceTable {
public:
    explicit RecurrenceTable(std::array<long, 3> seeds) {
        forward_.reserve(64);
        for (long s : seeds) forward_.emplace_back(s);
    }

    BigInt at(Index n) {
        if (n >= 0) return n < kCacheWindow ? cached_forward(n) : roll_forward(n);
        Index k = -n - 1;
        return k < kCacheWindow ? cached_backward(k) : roll_backward(n);
    }

private:
    BigInt cached_forward(Index n) {
        auto i = static_cast<std::size_t>(n);
        {
            std::shared_lock lock(mutex_);
            if (i < forward_.size()) return forward_[i];
        }
        std::unique_lock lock(mutex_);
        while (forward_.size() <= i) {
            std::size_t s = forward_.size();
            forward_.push_back(forward_[s - 1] + forward_[s - 2] + forward_[s - 3]);
        }
        return forward_[i];
    }

    // backward_[k] holds X(-(k+1)).
    BigInt cached_backward(Index k) {
        auto i = static_cast<std::size_t>(k);
        {
            std::shared_lock lock(mutex_);
            if (i < backward_.size()) return backward_[i];
        }
        std::unique_lock lock(mutex_);
        while (backward_.size() <= i) {
            Index n = -static_cast<Index>(backward_.size()) - 1;
            backward_.push_back(raw(n + 3) - raw(n + 2) - raw(n + 1));
        }
        return backward_[i];
    }

    // Caller holds the lock; n + 1..n + 3 are already materialized.
    const BigInt& raw(Index n) const {
        return n >= 0 ? forward_[static_cast<std::size_t>(n)] : backward_[static_cast<std::size_t>(-n - 1)];
    }

    BigInt roll_forward(Index n) {
        Index top = kCacheWindow - 1;
        BigInt a = cached_forward(top - 2), b = cached_forward(top - 1), c = cached_forward(top);
        for (Index i = top; i < n; ++i) {
            BigInt next = a + b + c;
            a = std::move(b);
            b = std::move(c);
            c = std::move(next);
        }
        return c;
    }

    BigInt roll_backward(Index n) {
        Index bottom = -kCacheWindow;
        BigInt a = cached_backward(kCacheWindow - 1);  // X(bottom)
        BigInt b = cached_backward(kCacheWindow - 2);  // X(bottom + 1)
        BigInt c = cached_backward(kCacheWindow - 3);  // X(bottom + 2)
        for (Index i = bottom; i > n; --i) {
            BigInt prev = c - b - a;
            c = std::move(b);
            b = std::move(a);
            a = std::move(prev);
        }
        return a;
    }

    std::shared_mutex mutex_;
    std::vector<BigInt> forward_;
    std::vector<BigInt> backward_;
};

RecurrenceTable& t_table() {
    static RecurrenceTable table({0, 1, 1});
    return table;
}

RecurrenceTable& k_table() {
    static RecurrenceTable table({3, 1, 3});
    return table;
}

BigInt iterate(std::array<long, 3> seeds, Index n) {
    BigInt a(seeds[0]), b(seeds[1]), c(seeds[2]);
    if (n >= 0) {
        for (Index i = 0; i < n; ++i) {
            BigInt next = a + b + c;
            a = std::move(b);
            b = std::move(c);
            c = std::move(next);
        }
        return a;
    }
    for (Index i = 0; i > n; --i) {
        BigInt prev = c - b - a;
        c = std::move(b);
        b = std::move(a);
        a = std::move(prev);
    }
    return a;
}

[[noreturn]] void out_of_domain(SequenceKind kind, Index n) {
    throw DomainError("index " + std::to_string(n) + " outside the domain of " + std::string(to_string(kind)) + " (" +
                      std::string(domain_text(kind)) + ")");
}

}  // namespace

std::string_view to_string(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::T: return "T";
        case SequenceKind::K: return "K";
        case SequenceKind::R: return "R";
        case SequenceKind::U: return "U";
        case SequenceKind::C: return "C";
        case SequenceKind::S: return "S";
    }
    return "?";
}

SequenceKind parse_sequence_kind(std::string_view name) {
    if (name == "T") return SequenceKind::T;
    if (name == "K") return SequenceKind::K;
    if (name == "R") return SequenceKind::R;
    if (name == "U") return SequenceKind::U;
    if (name == "C") return SequenceKind::C;
    if (name == "S") return SequenceKind::S;
    throw UnknownName("unknown sequence kind '" + std::string(name) + "' (expected T, K, R, U, C or S)");
}

Index domain_min(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::R:
        case SequenceKind::U:
        case SequenceKind::S: return 0;
        default: return std::numeric_limits<Index>::min();
    }
}

std::string_view domain_text(SequenceKind kind) {
    return domain_min(kind) == 0 ? "n >= 0" : "all integers";
}

BigInt tribonacci(Index n) { return t_table().at(n); }

BigInt tribonacci_lucas(Index n) { return k_table().at(n); }

BigInt tribonacci_uncached(Index n) { return iterate({0, 1, 1}, n); }

BigInt tribonacci_lucas_uncached(Index n) { return iterate({3, 1, 3}, n); }

BigInt derived_scalar(SequenceKind kind, Index n) {
    if (n < domain_min(kind)) out_of_domain(kind, n);
    switch (kind) {
        case SequenceKind::T: return tribonacci(n);
        case SequenceKind::K: return tribonacci_lucas(n);
        case SequenceKind::R: return 3 * tribonacci(n + 1) - tribonacci(n);
        case SequenceKind::U:
            // U_0 = U_1 = 0 are imposed seeds, not T_{-1} + T_{-2}.
            if (n < 2) return BigInt(0);
            return tribonacci(n - 1) + tribonacci(n - 2);
        case SequenceKind::C:
            // alpha*beta*gamma = 1, so the second elementary symmetric function of
            // the n-th powers equals the power sum at -n.
            return tribonacci_lucas(-n);
        case SequenceKind::S: {
            BigInt sum = 0;
            for (Index k = 0; k <= n; ++k) sum += tribonacci(k);
            return sum;
        }
    }
    out_of_domain(kind, n);
}

}  // namespace tribq
