#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syncstr/ecc.hpp"
#include "syncstr/fraction.hpp"
#include "syncstr/sync_string.hpp"

namespace syncstr {

/* A codeword with an index string attached position-wise: the channel sends
 * the pair (payload[i], index[i]) at position i, and index equals the fixed
 * synchronization string the codec was built around. */
struct IndexedWord {
  std::vector<Symbol> payload;
  std::vector<Symbol> index;
  size_t size() const { return payload.size(); }
};

/* One inserted pair: lands before the element currently at `pos` (1-based;
 * pos == length + 1 appends). Insertions apply in vector order, after all
 * deletions, each against the sequence produced so far. */
struct Insertion {
  int64_t pos = 1;
  Symbol payload = 0;
  Symbol index = 0;
};

/* One channel realization. Deletions are distinct 1-based positions of the
 * original word, strictly increasing. */
struct ChannelTrace {
  std::vector<int64_t> deletions;
  std::vector<Insertion> insertions;
};

/* Pair the message's codeword with the index string s. Requires
 * code.m == |s| and 0 <= message < codewords.size(). */
IndexedWord encode(int64_t message, const BlockCode& code, const SyncString& s);

/* Apply the trace: delete the listed positions (order preserved), then apply
 * the insertions. Throws param_error on a malformed trace. */
IndexedWord transmit(const IndexedWord& w, const ChannelTrace& trace);

/* Match the received index components against s by the deterministic LCS
 * witness. Entry r holds the matched 1-based position of s, or 0 when
 * received position r is unmatched. Assigned entries are strictly
 * increasing (a monotone matching cannot assign one position twice). */
std::vector<int64_t> recover_indices(const IndexedWord& received,
                                     const SyncString& s);

/* Place the received payloads at their recovered positions, erase the rest
 * (-1), and run nearest-codeword decoding. nullopt when the ECC layer cannot
 * identify a unique codeword within its half-error budget. Guaranteed to
 * return the encoded message whenever the trace was deletion-only with at
 * most deletion_budget(code, eps0) deletions and s is eps0-synchronizing. */
std::optional<int64_t> decode(const IndexedWord& received,
                              const BlockCode& code, const SyncString& s);

/* Largest deletion count the distance guarantees decodable: t deletions
 * cost at most t*(1+eps0)/(1-eps0) half-errors, and the decoder tolerates
 * d-1 of them, so t = floor((d-1)*(1-eps0)/(1+eps0)). eps0 in (0,1). */
int64_t deletion_budget(const BlockCode& code, const Fraction& eps0);

/* Deletion-only trace with `count` distinct positions drawn uniformly from
 * [1, n]; reproducible for a given seed. */
ChannelTrace random_deletions(int64_t n, int64_t count, uint64_t seed);

}  // namespace syncstr
