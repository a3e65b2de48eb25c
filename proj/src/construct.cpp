#include "syncstr/construct.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>

#include "syncstr/errors.hpp"
#include "syncstr/rng.hpp"
#include "syncstr/sampler.hpp"
#include "syncstr/verify.hpp"

namespace syncstr {

namespace {

int64_t to_i64(const bigint& v, const char* what) {
  if (v < 0 || v > bigint(std::numeric_limits<int64_t>::max()))
    throw param_error(std::string(what) + " out of int64 range");
  return v.convert_to<int64_t>();
}

/* Smallest b >= 1 with b^k >= ell. */
uint64_t smallest_base(int64_t k, int64_t ell) {
  if (ell <= 1) return 1;
  for (uint64_t b = 2;; ++b) {
    bigint p = 1;
    for (int64_t i = 0; i < k && p < ell; ++i) p *= b;
    if (p >= ell) return b;
  }
}

}  // namespace

CirclePlan make_circle_plan(const Fraction& eps0, const Fraction& delta) {
  if (!(Fraction(0) < eps0 && eps0 < Fraction(1)))
    throw param_error("eps0 must lie in (0, 1), got " + eps0.str());
  if (!(Fraction(0) < delta && delta <= Fraction(1)))
    throw param_error("delta must lie in (0, 1], got " + delta.str());
  CirclePlan p;
  p.eps0 = eps0;
  p.delta = delta;
  p.alpha =
      Fraction(1) - (Fraction(1) - eps0) / (Fraction(1) + eps0) * delta;
  p.eps1 = Fraction(10) * p.alpha;
  p.eps_long = Fraction(12) * p.alpha;
  return p;
}

SyncString circle_from_halves(const SyncString& s1, const SyncString& s2) {
  const int64_t n1 = int64_t(s1.size());
  const int64_t n2 = int64_t(s2.size());
  if (n1 != n2 && n1 != n2 + 1)
    throw param_error("half lengths must be a ceil/floor split, got " +
                      std::to_string(n1) + " and " + std::to_string(n2));
  s1.check();
  s2.check();
  std::unordered_set<Symbol> used(s1.symbols.begin(), s1.symbols.end());
  for (Symbol c : s2.symbols)
    if (used.count(c) != 0)
      throw param_error("halves share symbol " + std::to_string(c));
  SyncString out;
  out.alphabet_size = std::max(s1.alphabet_size, s2.alphabet_size);
  out.symbols.reserve(size_t(n1 + n2));
  out.symbols = s1.symbols;
  out.symbols.insert(out.symbols.end(), s2.symbols.begin(), s2.symbols.end());
  return out;
}

SyncString seed_circle(int64_t m, const Fraction& eps0, uint64_t seed,
                       int64_t max_retries) {
  if (m < 2) throw param_error("circle length must be >= 2");
  if (max_retries < 1) throw param_error("max_retries must be >= 1");
  SamplerParams params;
  params.eps = eps0;
  params.validate();
  const uint64_t sigma = params.sigma();
  const int64_t m1 = (m + 1) / 2;
  const int64_t m2 = m / 2;

  Violation last;
  bool has_last = false;
  for (int64_t attempt = 0; attempt < max_retries; ++attempt) {
    SyncString s1, s2;
    try {
      s1 = construct_lll(params, m1, mix_seed(seed, uint64_t(2 * attempt))).s;
      s2 = construct_lll(params, m2, mix_seed(seed, uint64_t(2 * attempt + 1))).s;
    } catch (const budget_error& e) {
      if (e.has_violation) {
        last = e.last_violation;
        has_last = true;
      }
      continue;
    }
    /* second half moves to the upper symbol bank */
    for (Symbol& c : s2.symbols) c = Symbol(c + sigma);
    s1.alphabet_size = 2 * sigma;
    s2.alphabet_size = 2 * sigma;
    SyncString circle = circle_from_halves(s1, s2);
    VerifyResult vr = verify_circle(circle, eps0);
    if (vr.pass()) return circle;
    last = *vr.violation;
    has_last = true;
  }
  const std::string msg = "seed circle: no passing candidate within " +
                          std::to_string(max_retries) + " retries";
  if (has_last) throw budget_error(msg, last);
  throw budget_error(msg);
}

BlockCode index_pairing(const BlockCode& code, const SyncString& circle) {
  if (code.m != int64_t(circle.size()))
    throw param_error("code block length " + std::to_string(code.m) +
                      " does not match circle length " +
                      std::to_string(circle.size()));
  circle.check();
  const uint64_t qc = circle.alphabet_size;
  if (bigint(code.q) * qc > (bigint(1) << 32))
    throw param_error("paired alphabet exceeds the symbol range");
  BlockCode out;
  out.m = code.m;
  out.q = code.q * qc;
  out.d = code.d;
  out.codewords.reserve(code.codewords.size());
  for (const auto& w : code.codewords) {
    std::vector<Symbol> paired(w.size());
    for (size_t i = 0; i < w.size(); ++i)
      paired[i] = Symbol(uint64_t(w[i]) * qc + circle.symbols[i]);
    out.codewords.push_back(std::move(paired));
  }
  return out;
}

BuildResult build_long_distance(int64_t n, const Fraction& eps, uint64_t seed,
                                const BuildOverrides& over) {
  if (n < 1) throw param_error("n must be >= 1");
  if (!(Fraction(0) < eps && eps < Fraction(1)))
    throw param_error("eps must lie in (0, 1), got " + eps.str());

  BuildResult r;
  const Fraction eps0 = eps / Fraction(36);

  /* plan: explicit delta must satisfy eps_long <= eps; otherwise take the
   * smallest delta = j/64 that does (eps_long falls as delta grows) */
  if (!over.delta.is_zero()) {
    r.plan = make_circle_plan(eps0, over.delta);
    if (!(r.plan.eps_long <= eps))
      throw param_error("plan infeasible: delta " + over.delta.str() +
                        " yields eps_long " + r.plan.eps_long.str() +
                        " > eps " + eps.str());
  } else {
    bool found = false;
    for (int64_t j = 1; j <= 64 && !found; ++j) {
      CirclePlan cand = make_circle_plan(eps0, Fraction(j, 64));
      if (cand.eps_long <= eps) {
        r.plan = cand;
        found = true;
      }
    }
    if (!found)
      throw param_error(
          "plan infeasible: no delta of the form j/64 yields eps_long <= eps");
  }

  /* sizes: m = ceil(c log2 n) with c = ceil(eps^-2) unless overridden */
  const int64_t c = over.c > 0
                        ? over.c
                        : to_i64((Fraction(1) / (eps * eps)).ceil(), "c");
  r.c = Fraction(c);
  r.m = over.m > 0
            ? over.m
            : std::max<int64_t>(2, ceil_mul_log2(Fraction(c), uint64_t(n)));
  if (r.m < 2) throw param_error("block length m must be >= 2");

  /* code: Reed-Solomon at distance ceil(delta*m); the field is the smallest
   * prime >= m large enough for q^k >= ell messages */
  r.d = to_i64((r.plan.delta * Fraction(r.m)).ceil(), "d");
  r.k = r.m - r.d + 1;
  r.ell = (n + r.m - 1) / r.m;
  r.q_code = next_prime(std::max(uint64_t(r.m), smallest_base(r.k, r.ell)));

  r.circle = seed_circle(r.m, eps0, mix_seed(seed, 1));
  r.q_circle = r.circle.alphabet_size;

  BlockCode code = rs_first(r.m, r.k, r.q_code, r.ell);
  if (int64_t(code.codewords.size()) < r.ell)
    throw param_error("code under-supplies codewords: got " +
                      std::to_string(code.codewords.size()) + ", need " +
                      std::to_string(r.ell));
  r.indexed = index_pairing(code, r.circle);

  SyncString full;
  full.alphabet_size = r.indexed.q;
  full.symbols.reserve(size_t(r.ell * r.m));
  for (const auto& w : r.indexed.codewords)
    full.symbols.insert(full.symbols.end(), w.begin(), w.end());

  r.s.alphabet_size = full.alphabet_size;
  r.s.symbols.assign(full.symbols.begin(), full.symbols.begin() + n);

  /* gates: interval pairs on the truncated output, rotations on the full
   * concatenation; sampled above the size threshold */
  if (n <= over.full_verify_threshold) {
    VerifyResult ld = verify_long_distance(r.s, eps, r.c);
    if (!ld.pass())
      throw construction_error("built string fails the interval-pair check",
                               *ld.violation);
    VerifyResult circ = verify_circle(full, r.plan.eps1);
    if (!circ.pass())
      throw construction_error("built concatenation fails the rotation check",
                               *circ.violation);
    r.fully_verified = true;
  } else {
    SampleBudget ld_budget{over.sample_triples, 600, mix_seed(seed, 5)};
    VerifyResult ld = verify_long_distance_sampled(r.s, eps, r.c, ld_budget);
    if (!ld.pass())
      throw construction_error("built string fails the interval-pair check",
                               *ld.violation);
    SampleBudget circ_budget{over.sample_triples, 600, mix_seed(seed, 6)};
    VerifyResult circ = verify_circle_sampled(full, r.plan.eps1, circ_budget);
    if (!circ.pass())
      throw construction_error("built concatenation fails the rotation check",
                               *circ.violation);
    r.fully_verified = false;
  }
  return r;
}

}  // namespace syncstr
