#pragma once

#include <cstdint>
#include <vector>

#include "syncstr/fraction.hpp"
#include "syncstr/sync_string.hpp"

namespace syncstr {

/* Result of the branch-and-prune enumeration of canonical strings (first
 * occurrences of symbols in increasing order) over a k-letter alphabet
 * satisfying the adjacent-interval property at eps.
 *
 * terminated == true certifies that no such string of length max_length + 1
 * exists over k letters: the property is hereditary and label-invariant, and
 * canonical enumeration covers one representative per relabeling class.
 * terminated == false means the extension budget (or the depth cap) was hit;
 * counts are partial, and frontier / next_symbol name the exact extension
 * attempt where the run stopped so a later run can resume from it.
 *
 * worst_ratio_seen is the minimum of ED(left, right) / (k_index - i) over
 * every triple the incremental checker examined on accepted extensions:
 * triples ending at the new frontier whose total length L still admits a
 * violation for the window width (L <= max_len_for_width[j - i]). Longer
 * triples are skipped as provably non-violating; their ratios only exceed
 * the recorded ones. Fraction(1) when no triple was examined. */
struct SearchCertificate {
  int64_t k = 0;
  Fraction eps;
  bool terminated = false;
  int64_t max_length = 0;
  int64_t nodes_visited = 0;  // extension attempts, accepted or pruned
  Fraction worst_ratio_seen = Fraction(1);
  std::vector<Symbol> frontier;  // path at the stop point; empty if terminated
  uint32_t next_symbol = 0;      // candidate about to be attempted at the stop
};

/* Checkpoint payload: the stop point of a previous run plus its counters. */
struct SearchState {
  std::vector<Symbol> path;
  uint32_t next_symbol = 0;
  int64_t nodes_visited = 0;
  int64_t max_length = 0;
  Fraction worst_ratio_seen = Fraction(1);
};

/* Depth-first search with incremental checks: a node of length n is extended
 * by one symbol, and the extension is pruned iff some triple ending at the
 * new last position violates the property (prefixes are already verified, so
 * frontier triples are the only new ones). Candidates are tried in
 * increasing symbol order over the canonical set {0, .., min(#used, k-1)};
 * node_budget bounds the number of attempts made by this run. The depth is
 * capped at 256 positions; reaching the cap stops the search unterminated.
 * Requires 2 <= k <= 6, 0 < eps < 1, node_budget >= 0. */
SearchCertificate search_bk(int64_t k, const Fraction& eps, int64_t node_budget);

/* The same search continued from a checkpoint: replays state.path (which
 * must be a viable node for this k and eps), restores the counters, and
 * resumes at state.next_symbol. node_budget again counts only the attempts
 * made by this run, so repeated resumes walk the whole tree in slices; the
 * final certificate equals the one an unbounded run would have produced. */
SearchCertificate search_bk_resume(int64_t k, const Fraction& eps,
                                   int64_t node_budget,
                                   const SearchState& state);

/* Exhaustive scan over all canonical strings of length exactly `len`. Every
 * string scores the minimum over its triples of ED(left, right) / length
 * (1 if it has no triple, i.e. len < 2); the result is the best score
 * together with the first string attaining it and that string's first
 * minimal triple. An eps-sync string of this length exists iff
 * 1 - eps < ratio. Requires k >= 1 and len >= 1; len is capped at 64 and
 * k^len at 2^22 (budget errors beyond). */
struct RatioWitness {
  Fraction ratio;
  std::vector<Symbol> witness;
  int64_t i = 0, j = 0, k = 0;  // 1-based triple; zeros when len < 2
};
RatioWitness worst_ratio(int64_t k, int64_t len);

}  // namespace syncstr
