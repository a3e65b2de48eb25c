#pragma once

/* Brute-force reference implementations for cross-checking the library.
 * Deliberately naive and structured differently from the production code. */

#include <cstdint>
#include <span>
#include <vector>

#include "syncstr/sync_string.hpp"

namespace syncstr::oracles {

/* LCS by enumerating every subsequence of the shorter string (|shorter| <= 20). */
int64_t lcs_enum(std::span<const Symbol> a, std::span<const Symbol> b);

/* Insertion/deletion edit distance by its own DP, not via the LCS identity. */
int64_t edit_distance_dp(std::span<const Symbol> a, std::span<const Symbol> b);

/* First violating rotation (0-based) of the adjacent-interval property over
 * every rotation, or -1 when all pass; rotation 0 alone checks the string
 * itself. Uses lcs_enum pieces via plain loops. */
int64_t first_bad_rotation(const SyncString& s, int64_t num, int64_t den);

/* Smallest (start, block length) square, 1-based start, or std::nullopt. */
struct SquareHit {
  int64_t start, len;
};
std::vector<SquareHit> all_squares(const SyncString& s);

/* Maximum pairs (a, b), a < b, both coordinates strictly increasing,
 * s[a] = s[b]; exponential recursion, |s| <= 10. */
int64_t self_matching_enum(const SyncString& s);

/* Longest pair of disjoint equal subsequences by trying all 3^n assignments
 * of positions to {unused, first copy, second copy}; |s| <= 12. */
int64_t twin_enum(const SyncString& s);

}  // namespace syncstr::oracles
