#pragma once

#include <cstdint>
#include <vector>

#include "syncstr/fraction.hpp"
#include "syncstr/sampler.hpp"
#include "syncstr/sync_string.hpp"

namespace syncstr {

/* Uniform morphism: every symbol maps to a length-`rank` image over the
 * same alphabet (images.size() symbols). */
struct Morphism {
  int64_t rank = 0;
  std::vector<std::vector<Symbol>> images;

  uint64_t alphabet() const { return images.size(); }
  void validate() const;
};

/* Symbol-wise substitution: |output| = rank * |s|, block i = images[s[i]]. */
SyncString apply_morphism(const Morphism& phi, const SyncString& s);

/* The cyclic-shift ternary morphism 0 -> 012, 1 -> 120, 2 -> 201: the
 * default subject of the degradation report. */
Morphism cyclic_ternary_morphism();

/* One report row: the largest LCS between two distinct symbols' m-fold
 * images, and that count over the image length rank^m. */
struct DegradationRow {
  int64_t m = 0;
  int64_t lcs = 0;
  bigint length;   // rank^m
  Fraction ratio;  // lcs / rank^m
};

/* Exact DP ratios for m = 0..max_m. Monotonicity is whatever the numbers
 * say; nothing is asserted. Guarded by a total-cell budget. */
std::vector<DegradationRow> morphism_degradation(const Morphism& phi,
                                                 int64_t max_m);

/* Length-n prefix of the ternary square-free fixed point of
 * 0 -> 012, 1 -> 02, 2 -> 1 (non-uniform), gated by the square checker. */
SyncString thue_square_free(int64_t n);

/* Parameters of the binary construction: a source string of quality
 * eps_prime over `sigma` symbols, k = ceil(log2 sigma) bits each, yields a
 * weak quality eps = 1 - (1-eps_prime)/(18k). */
struct WeakBinaryPlan {
  Fraction eps_prime;
  uint64_t sigma = 0;
  int64_t k = 0;
  Fraction eps;
};

/* sigma is the eps_prime constructor's alphabet (SamplerParams defaults). */
WeakBinaryPlan make_weak_plan(const Fraction& eps_prime);

struct WeakBinaryResult {
  SyncString s;        // binary, length n
  WeakBinaryPlan plan;
  SyncString source;   // the eps_prime-sync string the bits encode
  bool fully_verified = false;
};

/* Each source symbol becomes its k bits (most significant first) followed
 * by 0^k 1^k; the bit string is truncated to n. Gated by the weak verifier
 * at plan.eps when n <= gate_threshold. */
WeakBinaryResult weak_binary(int64_t n, const WeakBinaryPlan& plan,
                             uint64_t seed, int64_t gate_threshold = 1500);

struct FourLetterResult {
  SyncString s;  // alphabet {0,1,2,3}
  Fraction eps;
  Fraction eps_prime;          // 12*eps - 11
  SyncString square_free_source;
  WeakBinaryResult weak;       // bits indexed by occurrences of 0
  bool fully_verified = true;
};

/* Four-letter construction for eps in (11/12, 1): take the ternary
 * square-free string T of length n, a weak binary (12*eps-11)-sync string W
 * with one bit per occurrence of symbol 0 in T, and replace the i-th
 * occurrence of 0 by 3 iff W[i] = 1. Checks the proof-critical density
 * property (every length-4 window of T contains a 0), then gates the output
 * square-free always and with the triple verifier at eps — full when
 * n <= gate_threshold, sampled otherwise. */
FourLetterResult four_letter(int64_t n, const Fraction& eps, uint64_t seed,
                             int64_t gate_threshold = 1500);

}  // namespace syncstr
