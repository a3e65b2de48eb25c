#include "syncstr/small_alphabet.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "syncstr/errors.hpp"
#include "syncstr/lcs.hpp"
#include "syncstr/rng.hpp"
#include "syncstr/verify.hpp"

namespace syncstr {

void Morphism::validate() const {
  if (rank < 1) throw param_error("morphism rank must be >= 1");
  if (images.empty()) throw param_error("morphism needs at least one image");
  for (const auto& img : images) {
    if (int64_t(img.size()) != rank)
      throw param_error("every image must have length equal to the rank");
    for (Symbol c : img)
      if (uint64_t(c) >= images.size())
        throw param_error("image symbol " + std::to_string(c) +
                          " outside the morphism alphabet");
  }
}

SyncString apply_morphism(const Morphism& phi, const SyncString& s) {
  phi.validate();
  SyncString out;
  out.alphabet_size = phi.alphabet();
  out.symbols.reserve(s.size() * size_t(phi.rank));
  for (Symbol c : s.symbols) {
    if (uint64_t(c) >= phi.alphabet())
      throw param_error("symbol " + std::to_string(c) +
                        " outside the morphism alphabet");
    const auto& img = phi.images[c];
    out.symbols.insert(out.symbols.end(), img.begin(), img.end());
  }
  return out;
}

Morphism cyclic_ternary_morphism() {
  Morphism phi;
  phi.rank = 3;
  phi.images = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  return phi;
}

std::vector<DegradationRow> morphism_degradation(const Morphism& phi,
                                                 int64_t max_m) {
  phi.validate();
  if (max_m < 0) throw param_error("max_m must be >= 0");
  if (phi.alphabet() > 64)
    throw param_error("degradation report budget: alphabet must be <= 64");
  bigint final_len = 1;
  for (int64_t i = 0; i < max_m; ++i) final_len *= phi.rank;
  if (final_len > 8192)
    throw param_error(
        "degradation report budget: rank^max_m must be <= 8192");

  std::vector<SyncString> imgs(phi.alphabet());
  for (size_t a = 0; a < imgs.size(); ++a) {
    imgs[a].symbols = {Symbol(a)};
    imgs[a].alphabet_size = phi.alphabet();
  }

  std::vector<DegradationRow> rows;
  bigint len = 1;
  for (int64_t m = 0;; ++m) {
    int64_t best = 0;
    for (size_t a = 0; a < imgs.size(); ++a)
      for (size_t b = a + 1; b < imgs.size(); ++b)
        best = std::max(best, lcs_length(imgs[a].view(), imgs[b].view()));
    DegradationRow row;
    row.m = m;
    row.lcs = best;
    row.length = len;
    row.ratio = Fraction(best, len.convert_to<int64_t>());
    rows.push_back(row);
    if (m == max_m) break;
    for (auto& img : imgs) img = apply_morphism(phi, img);
    len *= phi.rank;
  }
  return rows;
}

SyncString thue_square_free(int64_t n) {
  if (n < 1) throw param_error("n must be >= 1");
  std::vector<Symbol> s{0};
  while (int64_t(s.size()) < n) {
    std::vector<Symbol> next;
    next.reserve(s.size() * 3);
    for (Symbol c : s) {
      switch (c) {
        case 0:
          next.insert(next.end(), {0, 1, 2});
          break;
        case 1:
          next.insert(next.end(), {0, 2});
          break;
        default:
          next.push_back(1);
          break;
      }
    }
    s = std::move(next);
  }
  s.resize(size_t(n));
  SyncString out;
  out.symbols = std::move(s);
  out.alphabet_size = 3;
  VerifyResult vr = verify_square_free(out);
  if (!vr.pass())
    throw construction_error("square-free generator failed its gate",
                             *vr.violation);
  return out;
}

WeakBinaryPlan make_weak_plan(const Fraction& eps_prime) {
  SamplerParams p;
  p.eps = eps_prime;
  p.validate();
  WeakBinaryPlan plan;
  plan.eps_prime = eps_prime;
  plan.sigma = p.sigma();
  plan.k = int64_t(std::bit_width(plan.sigma - 1));
  plan.eps =
      Fraction(1) - (Fraction(1) - eps_prime) / Fraction(18 * plan.k);
  return plan;
}

WeakBinaryResult weak_binary(int64_t n, const WeakBinaryPlan& plan,
                             uint64_t seed, int64_t gate_threshold) {
  if (n < 1) throw param_error("n must be >= 1");
  const WeakBinaryPlan expect = make_weak_plan(plan.eps_prime);
  if (plan.sigma != expect.sigma || plan.k != expect.k ||
      !(plan.eps == expect.eps))
    throw param_error("weak plan fields do not match its eps_prime");

  SamplerParams p;
  p.eps = plan.eps_prime;
  const int64_t block = 3 * plan.k;
  const int64_t source_len = (n + block - 1) / block;

  WeakBinaryResult r;
  r.plan = plan;
  r.source = construct_lll(p, source_len, seed).s;
  r.s.alphabet_size = 2;
  r.s.symbols.reserve(size_t(source_len * block));
  for (Symbol c : r.source.symbols) {
    for (int64_t b = plan.k - 1; b >= 0; --b)
      r.s.symbols.push_back(Symbol((c >> b) & 1));
    r.s.symbols.insert(r.s.symbols.end(), size_t(plan.k), 0);
    r.s.symbols.insert(r.s.symbols.end(), size_t(plan.k), 1);
  }
  r.s.symbols.resize(size_t(n));
  if (n <= gate_threshold) {
    VerifyResult vr = verify_weak(r.s, plan.eps);
    if (!vr.pass())
      throw construction_error("binary weak construction failed its gate",
                               *vr.violation);
    r.fully_verified = true;
  }
  return r;
}

FourLetterResult four_letter(int64_t n, const Fraction& eps, uint64_t seed,
                             int64_t gate_threshold) {
  if (n < 1) throw param_error("n must be >= 1");
  if (!(Fraction(11, 12) < eps && eps < Fraction(1)))
    throw param_error("eps must lie in (11/12, 1), got " + eps.str());

  FourLetterResult r;
  r.eps = eps;
  r.eps_prime = Fraction(12) * eps - Fraction(11);
  r.square_free_source = thue_square_free(n);
  const std::vector<Symbol>& t = r.square_free_source.symbols;

  /* proof-critical density: every length-4 window of the source has a 0 */
  int64_t occ = 0;
  int64_t run = 0;
  for (int64_t i = 0; i < n; ++i) {
    if (t[size_t(i)] == 0) {
      ++occ;
      run = 0;
    } else if (++run >= 4) {
      Violation v;
      v.kind = "density";
      v.indices = {i - 2};  // 1-based start of the zero-free window
      v.achieved = Fraction(0);
      v.required = Fraction(1);
      throw construction_error(
          "square-free source violates the occurrence-density property", v);
    }
  }

  r.weak = weak_binary(occ, make_weak_plan(r.eps_prime), mix_seed(seed, 1),
                       gate_threshold);

  r.s.alphabet_size = 4;
  r.s.symbols = t;
  int64_t idx = 0;
  for (Symbol& c : r.s.symbols)
    if (c == 0 && r.weak.s.symbols[size_t(idx++)] == 1) c = 3;

  VerifyResult sq = verify_square_free(r.s);
  if (!sq.pass())
    throw construction_error("four-letter output contains a square",
                             *sq.violation);
  if (n <= gate_threshold) {
    VerifyResult vr = verify_sync(r.s, eps);
    if (!vr.pass())
      throw construction_error("four-letter output failed the triple check",
                               *vr.violation);
    r.fully_verified = r.weak.fully_verified;
  } else {
    SampleBudget budget;
    budget.seed = mix_seed(seed, 2);
    VerifyResult vr = verify_sync_sampled(r.s, eps, budget);
    if (!vr.pass())
      throw construction_error("four-letter output failed the triple check",
                               *vr.violation);
    r.fully_verified = false;
  }
  return r;
}

}  // namespace syncstr
