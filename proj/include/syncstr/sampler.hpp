#pragma once

#include <cstdint>
#include <vector>

#include "syncstr/fraction.hpp"
#include "syncstr/rng.hpp"
#include "syncstr/sync_string.hpp"
#include "syncstr/verify.hpp"

namespace syncstr {

/* Parameters of the resampling constructor: alphabet sigma = ceil(c1/eps^2)
 * and lookback t = ceil(c2/eps^2). Position i draws uniformly among the
 * sigma - h symbols not used in the previous h = min(t-1, i) positions, so
 * every window of length <= t is pairwise distinct. The override fields pin
 * sigma/t directly (0 keeps the derived value). */
struct SamplerParams {
  Fraction eps;
  int64_t c1 = 32;
  int64_t c2 = 16;
  uint64_t sigma_override = 0;
  int64_t t_override = 0;

  uint64_t sigma() const;
  int64_t t() const;
  void validate() const;
};

/* One uniform variable per position: trace[i] in [1, sigma - min(t-1, i)]. */
using VariableTrace = std::vector<uint64_t>;

VariableTrace sample_trace(const SamplerParams& params, int64_t n, Rng& rng);

/* Redraws trace[lo, hi) from the rng stream; other entries are untouched. */
void resample_interval(VariableTrace& trace, const SamplerParams& params,
                       int64_t lo, int64_t hi, Rng& rng);

/* The string a trace determines: position i takes the (h + trace[i])-th
 * entry of a move-to-front list, whose first h entries are exactly the
 * previous h symbols, most recent first; the pick moves to the front. */
SyncString derive_string(const SamplerParams& params,
                         const VariableTrace& trace);

struct LllResult {
  SyncString s;
  VariableTrace trace;
  int64_t resamplings = 0;
  bool fully_verified = true;
};

/* Draws a trace, then repeatedly locates the violating triple minimizing
 * (length, i, j) and redraws its positions until none remains. Lengths up to
 * t need no checking (all-distinct windows). Throws budget_error carrying
 * the last violation after max_rounds resamplings; max_rounds <= 0 means
 * 50*n. */
LllResult construct_lll(const SamplerParams& params, int64_t n, uint64_t seed,
                        int64_t max_rounds = 0);

/* Same loop driven by sampled verification for sizes where the exact scan
 * is too expensive; the result is spot-checked, not proven, and is marked
 * fully_verified = false. */
LllResult construct_lll_sampled(const SamplerParams& params, int64_t n,
                                uint64_t seed, const SampleBudget& budget,
                                int64_t max_rounds = 0);

}  // namespace syncstr
