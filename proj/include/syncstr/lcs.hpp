#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "syncstr/sync_string.hpp"

namespace syncstr {

/* LCS length via the bit-parallel row recurrence (Hyyro): one word operation
 * batch per input symbol per 64 positions. Exact; used by every verifier. */
int64_t lcs_length(std::span<const Symbol> a, std::span<const Symbol> b);

inline int64_t lcs_length(const SyncString& a, const SyncString& b) {
  return lcs_length(a.view(), b.view());
}

/* Insertion/deletion edit distance: |a| + |b| - 2*LCS(a,b). */
int64_t edit_distance(std::span<const Symbol> a, std::span<const Symbol> b);

inline int64_t edit_distance(const SyncString& a, const SyncString& b) {
  return edit_distance(a.view(), b.view());
}

/* LCS with a deterministic witness: among all maximum matchings, the one
 * whose left-index sequence is lexicographically least, with right indices
 * minimized as a tiebreak. Quadratic memory; guarded for desk-scale sizes. */
struct LcsWitness {
  int64_t length = 0;
  Matching matching;
};
LcsWitness lcs(std::span<const Symbol> a, std::span<const Symbol> b);

inline LcsWitness lcs(const SyncString& a, const SyncString& b) {
  return lcs(a.view(), b.view());
}

/* Incremental bit-parallel LCS rows over one fixed subject string.
 *
 * Position masks are stored in absolute coordinates (bit p <-> subject[p]),
 * so a row over any window X = subject[lo, hi) works directly on the shared
 * masks: bits below lo stay zero under add/subtract, bits at hi and above
 * are cleared after every step. One row holds the classic V vector of the
 * recurrence restricted to its window; feeding symbol y advances the second
 * string by one and costs O(words in the window).
 *
 * row.lcs is maintained incrementally: LCS = window width - popcount(V). */
class BitLcs {
 public:
  explicit BitLcs(std::span<const Symbol> subject);

  struct Row {
    std::vector<uint64_t> v;  // sized to the subject's word count on init
    int64_t lo = 0, hi = 0;   // window [lo, hi) in subject positions
    int32_t wlo = 0, whi = 0; // inclusive word range backing the window
    uint64_t himask = ~0ULL;  // keep-mask for the top word
    int64_t lcs = 0;
  };

  /* Prepare a row over subject[lo, hi); reuses the row's buffer. */
  void init_row(Row& row, int64_t lo, int64_t hi) const;

  /* Advance the row's second string by one symbol. */
  void feed(Row& row, Symbol y) const;

  int64_t size() const { return n_; }

 private:
  int64_t n_;
  int32_t words_;
  std::vector<uint64_t> masks_;               // one block of words_ per distinct symbol
  std::unordered_map<Symbol, int32_t> id_of_; // symbol -> block index
};

}  // namespace syncstr
