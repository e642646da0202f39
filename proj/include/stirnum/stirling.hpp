#pragma once

#include "stirnum/bigint.hpp"

namespace stirnum {

// Stirling numbers of both kinds and their r-generalizations (elements
// 1..r constrained to distinct blocks / distinct cycles; r = 0 recovers the
// ordinary numbers). Values are computed by the triangular recurrences
//   S_r(n,k)   = k     * S_r(n-1,k)   + S_r(n-1,k-1)      (second kind)
//   [n k]_r    = (n-1) * [n-1 k]_r    + [n-1 k-1]_r       (first kind, unsigned)
// for n > r with base value 1 at (r,r), and 0 whenever n < r, k < r or
// k > n. Tables are memoized per (kind, r) for the process lifetime and grow
// on demand; queries are thread-safe (growth is serialized internally).
//
// Convention at the degenerate corner: [0 0]_0 = 1 (the empty permutation
// has zero cycles), matching S(0,0) = 1.

enum class StirlingKind { second, first_unsigned };

/// S(n,k), second kind, by the memoized recurrence. 0 out of range.
Int stirling2(long n, long k);

/// S(n,k) by the explicit alternating sum ((-1)^k/k!) sum_j C(k,j)(-1)^j j^n.
/// Requires 0 <= k <= n. Throws std::logic_error if the division by k! is
/// not exact (which would indicate a bug, since the sum is k! S(n,k)).
Int stirling2_explicit(long n, long k);

/// Unsigned first kind: permutations of n elements with k cycles.
Int stirling1_unsigned(long n, long k);
/// Signed first kind s(n,k) = (-1)^{n-k} [n k]: coefficients of the falling
/// factorial.
Int stirling1_signed(long n, long k);

/// r-Stirling numbers of the second kind S_r(n,k).
Int rstirling2(long r, long n, long k);

/// Right side of Broder's identity S_r(n+r,k+r) = sum_p C(n,p) S(p,k) r^{n-p},
/// evaluated literally (note the shifted indexing: this is the value at
/// (n+r, k+r)).
Int rstirling2_via_broder(long r, long n, long k);

/// Unsigned r-Stirling numbers of the first kind [n k]_r.
Int rstirling1_unsigned(long r, long n, long k);
/// s_r(n,k) = (-1)^{n-k} [n k]_r.
Int rstirling1_signed(long r, long n, long k);

/// Exhaustive count of set partitions of {1..n} into k nonempty blocks with
/// elements 1..r in pairwise distinct blocks. Returns 0 when n < r (the
/// triangle convention). Enumeration bound n <= 12; throws
/// std::invalid_argument above it.
Int brute_partitions(int n, int k, int r);

/// Exhaustive count of permutations of {1..n} with exactly k cycles and
/// 1..r in distinct cycles. Returns 0 when n < r. Enumeration bound n <= 9;
/// throws std::invalid_argument above it.
Int brute_cycle_permutations(int n, int k, int r);

/// Test hook: adds delta to the memoized entry at (n,k) of the (kind,r)
/// table, growing it first. Throws std::invalid_argument outside the
/// triangle. Used by the verification harness to exercise failure paths.
void corrupt_table_for_testing(StirlingKind kind, long r, long n, long k, long delta);

/// Test hook: drops all memoized tables.
void reset_tables_for_testing();

}  // namespace stirnum
