#pragma once

#include <cstdint>

#include "syncstr/ecc.hpp"
#include "syncstr/fraction.hpp"
#include "syncstr/sync_string.hpp"

namespace syncstr {

/* Parameter sheet of the code-times-circle construction. From a circle of
 * quality eps0 and a code of relative distance delta, the concatenated
 * string inherits rotation quality eps1 = 10*alpha and interval-pair quality
 * eps_long = 12*alpha, where alpha = 1 - ((1-eps0)/(1+eps0))*delta. */
struct CirclePlan {
  Fraction eps0;
  Fraction delta;
  Fraction alpha;
  Fraction eps1;
  Fraction eps_long;
  bool useful() const { return eps_long < Fraction(1); }
};

CirclePlan make_circle_plan(const Fraction& eps0, const Fraction& delta);

/* Concatenation of two strings over disjoint symbol sets; the halves may
 * differ in length by at most one (first half the longer). When both halves
 * satisfy the adjacent-interval property at some eps, the result satisfies
 * it under every rotation at the same eps. */
SyncString circle_from_halves(const SyncString& s1, const SyncString& s2);

/* A length-m string passing verify_circle(eps0): two randomized halves over
 * disjoint banks, rebuilt with incremented sub-seeds until the rotation
 * check passes. Deterministic in (m, eps0, seed). Throws budget_error after
 * max_retries failed attempts. */
SyncString seed_circle(int64_t m, const Fraction& eps0, uint64_t seed,
                       int64_t max_retries = 100);

/* Zip every codeword with the circle position-wise: paired symbol =
 * code symbol * circle alphabet + circle symbol. Requires code.m equal to
 * the circle length; the distance carries over. */
BlockCode index_pairing(const BlockCode& code, const SyncString& circle);

struct BuildOverrides {
  int64_t m = 0;            // 0: ceil(c * log2 n), floored at 2
  int64_t c = 0;            // 0: ceil(eps^-2)
  Fraction delta;           // zero: smallest j/64 satisfying the plan
  int64_t full_verify_threshold = 1500;
  uint64_t sample_triples = 1000000;
};

struct BuildResult {
  SyncString s;       // the requested prefix, length n
  CirclePlan plan;
  Fraction c;         // length-scale constant handed to the verifier
  int64_t m = 0;      // block/circle length
  int64_t ell = 0;    // codeword count before truncation
  int64_t d = 0;      // code distance
  int64_t k = 0;      // code dimension
  uint64_t q_code = 0;
  uint64_t q_circle = 0;
  SyncString circle;
  BlockCode indexed;  // the ell indexed codewords
  bool fully_verified = true;
};

/* End-to-end builder: solve the plan (eps0 = eps/36, smallest delta = j/64
 * with eps_long <= eps), build the seed circle and a Reed-Solomon code of
 * distance ceil(delta*m) supplying ceil(n/m) codewords, pair, concatenate,
 * truncate to n. The output is gated by the interval-pair verifier at
 * (eps, c) and the untruncated concatenation by the rotation verifier at
 * eps1 — in full below the size threshold, sampled above it. Throws
 * param_error when the plan is infeasible and construction_error when a
 * gate fails. */
BuildResult build_long_distance(int64_t n, const Fraction& eps, uint64_t seed,
                                const BuildOverrides& over = {});

}  // namespace syncstr
