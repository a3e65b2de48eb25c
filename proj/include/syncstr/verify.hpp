#pragma once

#include <optional>
#include <span>
#include <vector>

#include "syncstr/fraction.hpp"
#include "syncstr/sync_string.hpp"

namespace syncstr {

struct VerifyResult {
  std::optional<Violation> violation;
  uint64_t checks = 0;  // number of interval comparisons performed
  bool pass() const { return !violation.has_value(); }
};

/* Integer threshold tables: a triple of total length L violates the property
 * iff LCS(left, right) >= thr[L]. Index 0..nmax; lengths that can never
 * violate hold a value no LCS can attain. */
std::vector<int64_t> sync_thresholds(const Fraction& eps, int64_t nmax);
std::vector<int64_t> weak_thresholds(const Fraction& eps, int64_t nmax);

/* max_len_for_width[w] = largest L <= nmax with thr[L] <= w (0 if none):
 * a split whose shorter-side capacity is w can only violate at lengths up to
 * this, because LCS <= min side length. */
std::vector<int64_t> max_len_for_width(const std::vector<int64_t>& thr);

/* Adjacent-interval checks: ED(s[i,j), s[j,k)) vs the property threshold for
 * every 1 <= i < j < k <= n+1. Returns the lexicographically smallest
 * violating (i, j, k) or passes. eps must lie in (0,1). */
VerifyResult verify_sync(const SyncString& s, const Fraction& eps);
VerifyResult verify_weak(const SyncString& s, const Fraction& eps);

/* Every left-rotation must pass verify_sync; the violation carries the
 * 0-based rotation count of the first failing rotation. */
VerifyResult verify_circle(const SyncString& s, const Fraction& eps);

/* No substring equals the substring immediately following it. A violation
 * reports the smallest (start, block length), 1-based start. */
VerifyResult verify_square_free(const SyncString& s);

/* Interval pairs [i,j), [i2,j2) with j <= i2, threshold ED > (1-eps)*l over
 * the total length l. Default mode checks adjacent pairs with l <= T and all
 * pairs with T < l <= 2T, where T = ceil(c*log2 n); exhaustive mode checks
 * adjacent pairs of every length plus all pairs with l > T. */
VerifyResult verify_long_distance(const SyncString& s, const Fraction& eps,
                                  const Fraction& c, bool exhaustive = false);

/* Sampled spot-checks for sizes beyond the cubic scan's budget: one fully
 * verified random window plus `triples` uniformly sampled triples. */
struct SampleBudget {
  uint64_t triples = 1000000;
  int64_t window_len = 600;
  uint64_t seed = 0;
};
VerifyResult verify_sync_sampled(const SyncString& s, const Fraction& eps,
                                 const SampleBudget& budget);
/* Same idea over rotations: samples (rotation, triple) pairs and fully
 * verifies one random window of one random rotation. */
VerifyResult verify_circle_sampled(const SyncString& s, const Fraction& eps,
                                   const SampleBudget& budget);
/* Interval-pair analogue: full default-mode scan of one random window using
 * the whole string's length scale T, plus `triples` sampled admitted pairs. */
VerifyResult verify_long_distance_sampled(const SyncString& s,
                                          const Fraction& eps,
                                          const Fraction& c,
                                          const SampleBudget& budget);

/* Shortest-first violation scan used by the resampling constructor: finds
 * the violating triple minimizing (length, i, j), restricted to lengths
 * > min_len (windows at or below min_len are all-distinct by construction
 * and cannot violate). thr from sync_thresholds. */
std::optional<Violation> find_violation_banded(std::span<const Symbol> s,
                                               const std::vector<int64_t>& thr,
                                               int64_t min_len);

/* Reference implementations: plain quadratic DP per triple, cubic triple
 * enumeration. They share nothing with the bit-parallel path and exist to
 * cross-check it on small inputs. */
VerifyResult verify_sync_naive(const SyncString& s, const Fraction& eps);
VerifyResult verify_weak_naive(const SyncString& s, const Fraction& eps);

/* Largest monotone matching of s against itself with every pair strictly
 * left-to-right (a < b, s[a] = s[b]). Quadratic DP; bound guards memory. */
int64_t max_self_matching(const SyncString& s, Matching* witness = nullptr,
                          int64_t bound = 2048);

/* Length of the longest pair of disjoint equal subsequences. Exact search,
 * exponential state space: |s| <= bound (default 24), alphabet <= 16. */
int64_t longest_twin(const SyncString& s, int64_t bound = 24);

}  // namespace syncstr
