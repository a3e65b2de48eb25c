#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "syncstr/fraction.hpp"
#include "syncstr/sync_string.hpp"

namespace syncstr {

/* A block code: `codewords.size()` words of length m over alphabet [0, q),
 * with guaranteed minimum Hamming distance d. */
struct BlockCode {
  int64_t m = 0;
  uint64_t q = 0;
  int64_t d = 0;
  std::vector<std::vector<Symbol>> codewords;

  void validate() const;               // shape and range checks
  int64_t measured_distance() const;   // exact min pairwise distance, O(c^2 m)
};

struct GreedyResult {
  BlockCode code;
  bigint target;        // requested codeword count
  bool reached = false; // count >= target
};

/* Lexicographic greedy code over [q]^m keeping words at distance >= d from
 * everything kept so far. Stops once `target` words are kept (target <= 0
 * exhausts the space). The full enumeration is bounded: q^m <= 2^24. */
GreedyResult greedy_code_forced(int64_t m, uint64_t q, int64_t d,
                                const bigint& target);

/* Parameter policy on top of the forced variant: q = ceil(B/eps) where B is
 * a rational upper bound of 2e, d = ceil((1-eps)m), target = floor(2^(eps*m)). */
GreedyResult greedy_code(int64_t m, const Fraction& eps);

/* Systematic Reed-Solomon evaluation code: prime q >= m, points 0..m-1; the
 * message supplies the codeword values at points 0..k-1 and the unique
 * interpolating polynomial of degree < k fills the rest. Distance m-k+1. */
std::vector<Symbol> rs_encode(int64_t m, int64_t k, uint64_t q,
                              std::span<const Symbol> message);

/* All q^k codewords in message-lexicographic order (guarded: q^k <= 2^22). */
BlockCode rs_code(int64_t m, int64_t k, uint64_t q);

/* The first `count` codewords in message-lexicographic order. */
BlockCode rs_first(int64_t m, int64_t k, uint64_t q, int64_t count);

/* Codeword replacement: every symbol of an outer word becomes the inner
 * codeword it indexes; needs inner count >= outer q. Distance multiplies. */
BlockCode concat_code(const BlockCode& outer, const BlockCode& inner);

/* Nearest-codeword decoding under the half-distance budget. `received`
 * holds symbols or -1 for an erasure; a codeword scores 2 per disagreement
 * plus 1 per erasure. Returns the index of the unique codeword scoring
 * below d, or nullopt (not decodable / tie). */
std::optional<int64_t> decode_half_errors(const BlockCode& code,
                                          std::span<const int64_t> received);

}  // namespace syncstr
