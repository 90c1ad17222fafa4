#pragma once

/**
 * @file seqcore.hpp
 * @brief Exact Tribonacci (T) and Tribonacci-Lucas (K) numbers over all integer
 *        indices, plus the auxiliary sequences R, U, C and S.
 *
 * Forward:  X(n) = X(n-1) + X(n-2) + X(n-3)
 * Backward: X(n) = X(n+3) - X(n+2) - X(n+1)
 *
 * Seeds: T = (0, 1, 1), K = (3, 1, 3) at n = 0, 1, 2.
 */

#include "tribq/bigint.hpp"

#include <cstdint>
#include <string_view>

namespace tribq {

using Index = std::int64_t;

enum class SequenceKind { T, K, R, U, C, S };

std::string_view to_string(SequenceKind kind);
SequenceKind parse_sequence_kind(std::string_view name);

/// Smallest valid index for the kind; INT64_MIN for kinds defined on all integers.
Index domain_min(SequenceKind kind);
std::string_view domain_text(SequenceKind kind);

BigInt tribonacci(Index n);
BigInt tribonacci_lucas(Index n);

/// R, U, C or S. Throws DomainError if n lies outside the kind's domain.
/// T and K are accepted too and forward to the functions above.
BigInt derived_scalar(SequenceKind kind, Index n);

/// Same as derived_scalar but dispatching all six kinds; used by the CLI.
inline BigInt sequence_value(SequenceKind kind, Index n) { return derived_scalar(kind, n); }

/// Plain iteration from the seeds with no cache. Reference path for tests.
BigInt tribonacci_uncached(Index n);
BigInt tribonacci_lucas_uncached(Index n);

}  // namespace tribq
