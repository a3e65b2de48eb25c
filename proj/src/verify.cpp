#include "syncstr/verify.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "syncstr/errors.hpp"
#include "syncstr/lcs.hpp"
#include "syncstr/rng.hpp"

namespace syncstr {

namespace {

void check_eps(const Fraction& eps) {
  if (!(Fraction(0) < eps) || !(eps < Fraction(1)))
    throw param_error("eps must lie strictly between 0 and 1, got " + eps.str());
}

int64_t to_i64_capped(const bigint& v) {
  if (v > bigint(INT64_MAX / 2)) return INT64_MAX;
  return v.convert_to<long long>();
}

struct TripleHit {
  int64_t i, j, k;  // 0-based: intervals s[i,j), s[j,k)
  int64_t lcs;
};

Violation triple_violation(const char* kind, const TripleHit& h,
                           const Fraction& eps, bool weak, int64_t rotation) {
  Violation v;
  v.kind = kind;
  v.indices = {h.i + 1, h.j + 1, h.k + 1};
  v.rotation = rotation;
  const int64_t L = h.k - h.i;
  const int64_t ed = L - 2 * h.lcs;
  if (weak) {
    v.achieved = Fraction(ed);
    v.required = Fraction(((Fraction(1) - eps) * Fraction(L)).floor(), 1);
  } else {
    v.achieved = Fraction(ed, L);
    v.required = Fraction(1) - eps;
  }
  return v;
}

/* First violating triple in lexicographic (i, j, k) order. Skips lengths
 * <= min_len. maxL prunes k by the shorter-side capacity: LCS(left, right)
 * <= j - i, so lengths beyond max_len_for_width[j-i] can never violate. */
std::optional<TripleHit> scan_lex(std::span<const Symbol> s,
                                  const std::vector<int64_t>& thr,
                                  const std::vector<int64_t>& maxL,
                                  int64_t min_len, uint64_t& checks) {
  const int64_t n = int64_t(s.size());
  if (n < 2) return std::nullopt;
  BitLcs engine(s);
  BitLcs::Row row;
  for (int64_t i = 0; i + 2 <= n; ++i) {
    for (int64_t j = i + 1; j < n; ++j) {
      const int64_t kmax = std::min(n, i + maxL[j - i]);
      const int64_t kmin = std::max(j + 1, i + min_len + 1);
      if (kmax < kmin) continue;
      engine.init_row(row, i, j);
      for (int64_t k = j + 1; k <= kmax; ++k) {
        engine.feed(row, s[k - 1]);
        if (k < kmin) continue;
        if (row.lcs >= thr[k - i]) {
          checks += uint64_t(k - kmin + 1);
          return TripleHit{i, j, k, row.lcs};
        }
      }
      checks += uint64_t(kmax - kmin + 1);
    }
  }
  return std::nullopt;
}

int64_t lcs_dp(std::span<const Symbol> a, std::span<const Symbol> b) {
  const size_t m = a.size(), n = b.size();
  std::vector<int32_t> prev(n + 1, 0), cur(n + 1, 0);
  for (size_t i = 1; i <= m; ++i) {
    for (size_t j = 1; j <= n; ++j)
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[n];
}

VerifyResult verify_triples_naive(const SyncString& s, const Fraction& eps,
                                  bool weak) {
  check_eps(eps);
  VerifyResult res;
  const auto sp = s.view();
  const int64_t n = int64_t(sp.size());
  const Fraction one_minus = Fraction(1) - eps;
  for (int64_t i = 0; i + 2 <= n; ++i)
    for (int64_t j = i + 1; j < n; ++j)
      for (int64_t k = j + 1; k <= n; ++k) {
        const int64_t L = k - i;
        const int64_t lc = lcs_dp(sp.subspan(size_t(i), size_t(j - i)),
                                  sp.subspan(size_t(j), size_t(k - j)));
        const Fraction ed(L - 2 * lc);
        ++res.checks;
        const bool ok = weak
            ? ed >= Fraction((one_minus * Fraction(L)).floor(), 1)
            : ed > one_minus * Fraction(L);
        if (!ok) {
          res.violation = triple_violation(weak ? "weak" : "sync",
                                           TripleHit{i, j, k, lc}, eps, weak, 0);
          return res;
        }
      }
  return res;
}

}  // namespace

std::vector<int64_t> sync_thresholds(const Fraction& eps, int64_t nmax) {
  check_eps(eps);
  std::vector<int64_t> thr(size_t(nmax) + 1, INT64_MAX);
  const bigint num = eps.num();
  const bigint den2 = 2 * eps.den();
  for (int64_t L = 1; L <= nmax; ++L)
    thr[size_t(L)] = to_i64_capped(ceil_div(num * L, den2));
  return thr;
}

std::vector<int64_t> weak_thresholds(const Fraction& eps, int64_t nmax) {
  check_eps(eps);
  std::vector<int64_t> thr(size_t(nmax) + 1, INT64_MAX);
  const bigint num = eps.num(), den = eps.den();
  for (int64_t L = 1; L <= nmax; ++L) {
    const bigint floor_req = ((den - num) * L) / den;  // floor((1-eps)*L)
    if (floor_req <= 0) continue;                      // ED >= 0 always holds
    thr[size_t(L)] = to_i64_capped(ceil_div(L - floor_req + 1, 2));
  }
  return thr;
}

std::vector<int64_t> max_len_for_width(const std::vector<int64_t>& thr) {
  const int64_t n = int64_t(thr.size()) - 1;
  std::vector<int64_t> best_at(size_t(n) + 1, 0);
  for (int64_t L = 1; L <= n; ++L)
    if (thr[size_t(L)] <= n) {
      int64_t& slot = best_at[size_t(thr[size_t(L)])];
      slot = std::max(slot, L);
    }
  for (int64_t w = 1; w <= n; ++w)
    best_at[size_t(w)] = std::max(best_at[size_t(w)], best_at[size_t(w - 1)]);
  return best_at;
}

VerifyResult verify_sync(const SyncString& s, const Fraction& eps) {
  check_eps(eps);
  VerifyResult res;
  const int64_t n = int64_t(s.size());
  if (n < 2) return res;
  const auto thr = sync_thresholds(eps, n);
  const auto maxL = max_len_for_width(thr);
  if (auto hit = scan_lex(s.view(), thr, maxL, 1, res.checks))
    res.violation = triple_violation("sync", *hit, eps, false, 0);
  return res;
}

VerifyResult verify_weak(const SyncString& s, const Fraction& eps) {
  check_eps(eps);
  VerifyResult res;
  const int64_t n = int64_t(s.size());
  if (n < 2) return res;
  const auto thr = weak_thresholds(eps, n);
  const auto maxL = max_len_for_width(thr);
  if (auto hit = scan_lex(s.view(), thr, maxL, 1, res.checks))
    res.violation = triple_violation("weak", *hit, eps, true, 0);
  return res;
}

VerifyResult verify_circle(const SyncString& s, const Fraction& eps) {
  check_eps(eps);
  VerifyResult res;
  const int64_t n = int64_t(s.size());
  if (n < 2) return res;
  const auto thr = sync_thresholds(eps, n);
  const auto maxL = max_len_for_width(thr);
  std::vector<Symbol> rotated(s.symbols.begin(), s.symbols.end());
  for (int64_t r = 0; r < n; ++r) {
    if (r > 0)
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (auto hit = scan_lex(rotated, thr, maxL, 1, res.checks)) {
      res.violation = triple_violation("circle", *hit, eps, false, r);
      return res;
    }
  }
  return res;
}

VerifyResult verify_square_free(const SyncString& s) {
  VerifyResult res;
  const auto sp = s.view();
  const int64_t n = int64_t(sp.size());
  bool found = false;
  /* Anchored scan: a square of period l covers some multiple of l; extend
   * matches forward/backward around each anchor pair (a-l, a). */
  for (int64_t l = 1; !found && 2 * l <= n; ++l) {
    for (int64_t a = l; a < n; a += l) {
      const int64_t b = a - l;
      int64_t f = 0;
      while (f < l && a + f < n && sp[size_t(b + f)] == sp[size_t(a + f)]) ++f;
      int64_t g = 0;
      while (g < l - 1 && g < b && sp[size_t(b - 1 - g)] == sp[size_t(a - 1 - g)]) ++g;
      ++res.checks;
      if (f + g >= l) {
        const int64_t istart = b - g;
        const int64_t iend = std::min(b + f - l, n - 2 * l);
        if (istart <= iend) {
          found = true;
          break;
        }
      }
    }
  }
  if (!found) return res;
  /* A square exists; rescan naively for the smallest (start, length). */
  for (int64_t i = 0; i < n; ++i)
    for (int64_t l = 1; i + 2 * l <= n; ++l) {
      bool eq = true;
      for (int64_t x = 0; x < l && eq; ++x)
        eq = sp[size_t(i + x)] == sp[size_t(i + l + x)];
      if (eq) {
        Violation v;
        v.kind = "square";
        v.indices = {i + 1, l};
        v.achieved = Fraction(0);  // ED between the two blocks
        v.required = Fraction(1);
        res.violation = std::move(v);
        return res;
      }
    }
  throw std::logic_error("square scan inconsistency");  // unreachable
}

namespace {

/* Core interval-pair scan with an explicit length scale T; thr/maxL sized
 * for at least s.size(). Returns the first violation in (i, j, i2, j2)
 * order with 0-based half-open intervals. */
struct PairHit {
  int64_t i, j, i2, j2;
  int64_t lcs;
};

std::optional<PairHit> scan_pairs(std::span<const Symbol> sp, int64_t T,
                                  bool exhaustive,
                                  const std::vector<int64_t>& thr,
                                  const std::vector<int64_t>& maxL,
                                  uint64_t& checks) {
  const int64_t n = int64_t(sp.size());
  if (n < 2) return std::nullopt;
  BitLcs engine(sp);
  BitLcs::Row row;
  for (int64_t i = 0; i + 2 <= n; ++i) {
    for (int64_t j = i + 1; j < n; ++j) {
      const int64_t l1 = j - i;
      const int64_t lcap =
          std::min(exhaustive ? n : 2 * T, std::min(n, maxL[size_t(l1)]));
      if (l1 + 1 > lcap) continue;
      for (int64_t i2 = j; i2 < n; ++i2) {
        const bool adjacent = i2 == j;
        const int64_t j2max = std::min(n, i2 + (lcap - l1));
        engine.init_row(row, i, j);
        for (int64_t j2 = i2 + 1; j2 <= j2max; ++j2) {
          engine.feed(row, sp[size_t(j2 - 1)]);
          const int64_t l = l1 + (j2 - i2);
          const bool admitted =
              exhaustive ? (adjacent || l > T)
                         : (adjacent ? l <= 2 * T : (l > T && l <= 2 * T));
          if (!admitted) continue;
          ++checks;
          if (row.lcs >= thr[size_t(l)])
            return PairHit{i, j, i2, j2, row.lcs};
        }
      }
    }
  }
  return std::nullopt;
}

Violation pair_violation(const PairHit& h, const Fraction& eps) {
  Violation v;
  v.kind = "long-distance";
  v.indices = {h.i + 1, h.j + 1, h.i2 + 1, h.j2 + 1};
  const int64_t l = (h.j - h.i) + (h.j2 - h.i2);
  v.achieved = Fraction(l - 2 * h.lcs, l);
  v.required = Fraction(1) - eps;
  return v;
}

}  // namespace

VerifyResult verify_long_distance(const SyncString& s, const Fraction& eps,
                                  const Fraction& c, bool exhaustive) {
  check_eps(eps);
  if (!(c > Fraction(0))) throw param_error("c must be positive");
  VerifyResult res;
  const auto sp = s.view();
  const int64_t n = int64_t(sp.size());
  if (n < 2) return res;
  const int64_t T = ceil_mul_log2(c, uint64_t(n));
  const auto thr = sync_thresholds(eps, n);
  const auto maxL = max_len_for_width(thr);
  if (auto hit = scan_pairs(sp, T, exhaustive, thr, maxL, res.checks))
    res.violation = pair_violation(*hit, eps);
  return res;
}

VerifyResult verify_long_distance_sampled(const SyncString& s,
                                          const Fraction& eps,
                                          const Fraction& c,
                                          const SampleBudget& budget) {
  check_eps(eps);
  if (!(c > Fraction(0))) throw param_error("c must be positive");
  VerifyResult res;
  const auto sp = s.view();
  const int64_t n = int64_t(sp.size());
  if (n < 2) return res;
  if (n <= budget.window_len) return verify_long_distance(s, eps, c, false);
  const int64_t T = ceil_mul_log2(c, uint64_t(n));
  const auto thr = sync_thresholds(eps, n);
  const auto maxL = max_len_for_width(thr);
  Rng rng(budget.seed);

  /* One random window scanned in full with the whole string's T. */
  const int64_t wlen = budget.window_len;
  const int64_t start = int64_t(rng.below(uint64_t(n - wlen) + 1));
  if (auto hit = scan_pairs(sp.subspan(size_t(start), size_t(wlen)), T, false,
                            thr, maxL, res.checks)) {
    PairHit shifted{hit->i + start, hit->j + start, hit->i2 + start,
                    hit->j2 + start, hit->lcs};
    res.violation = pair_violation(shifted, eps);
    return res;
  }

  /* Sampled admitted pairs: total length in [2, 2T], random split and
   * placement, rejecting draws outside the admitted classes. */
  BitLcs engine(sp);
  BitLcs::Row row;
  const int64_t lmax = std::min<int64_t>(2 * T, n);
  for (uint64_t t = 0; t < budget.triples; ++t) {
    const int64_t l = 2 + int64_t(rng.below(uint64_t(lmax - 1)));
    const int64_t l1 = 1 + int64_t(rng.below(uint64_t(l - 1)));
    const int64_t l2 = l - l1;
    const int64_t i = int64_t(rng.below(uint64_t(n - l) + 1));
    const int64_t j = i + l1;
    const int64_t i2 = j + int64_t(rng.below(uint64_t(n - l2 - j) + 1));
    const int64_t j2 = i2 + l2;
    const bool adjacent = i2 == j;
    if (!(adjacent ? l <= 2 * T : (l > T && l <= 2 * T))) continue;
    ++res.checks;
    engine.init_row(row, i, j);
    for (int64_t p = i2; p < j2; ++p) engine.feed(row, sp[size_t(p)]);
    if (row.lcs >= thr[size_t(l)]) {
      res.violation = pair_violation(PairHit{i, j, i2, j2, row.lcs}, eps);
      return res;
    }
  }
  return res;
}

namespace {

/* One sampled triple check against the doubled-subject engine; offset shifts
 * window coordinates (rotation origin). Swaps sides so the row covers the
 * shorter interval. Returns lcs, or -1 when pruning shows no violation is
 * possible at this length. */
int64_t sampled_triple_lcs(const BitLcs& engine, BitLcs::Row& row,
                           std::span<const Symbol> subject, int64_t off,
                           int64_t x, int64_t y, int64_t z,
                           const std::vector<int64_t>& maxL) {
  const int64_t L = z - x;
  const int64_t wl = y - x, wr = z - y;
  if (L > maxL[std::min(wl, wr)]) return -1;
  if (wl <= wr) {
    engine.init_row(row, off + x, off + y);
    for (int64_t p = y; p < z; ++p) engine.feed(row, subject[size_t(off + p)]);
  } else {
    engine.init_row(row, off + y, off + z);
    for (int64_t p = x; p < y; ++p) engine.feed(row, subject[size_t(off + p)]);
  }
  return row.lcs;
}

/* Draw 0 <= x < y < z <= n uniformly over all boundary triples. */
void draw_triple(Rng& rng, int64_t n, int64_t& x, int64_t& y, int64_t& z) {
  for (;;) {
    int64_t a = int64_t(rng.below(uint64_t(n) + 1));
    int64_t b = int64_t(rng.below(uint64_t(n) + 1));
    int64_t c = int64_t(rng.below(uint64_t(n) + 1));
    if (a == b || a == c || b == c) continue;
    x = std::min({a, b, c});
    z = std::max({a, b, c});
    y = a + b + c - x - z;
    return;
  }
}

}  // namespace

VerifyResult verify_sync_sampled(const SyncString& s, const Fraction& eps,
                                 const SampleBudget& budget) {
  check_eps(eps);
  VerifyResult res;
  const auto sp = s.view();
  const int64_t n = int64_t(sp.size());
  if (n < 2) return res;
  if (n <= budget.window_len) return verify_sync(s, eps);
  const auto thr = sync_thresholds(eps, n);
  const auto maxL = max_len_for_width(thr);
  Rng rng(budget.seed);

  const int64_t wlen = budget.window_len;
  const int64_t start = int64_t(rng.below(uint64_t(n - wlen) + 1));
  if (auto hit = scan_lex(sp.subspan(size_t(start), size_t(wlen)), thr, maxL,
                          1, res.checks)) {
    TripleHit shifted{hit->i + start, hit->j + start, hit->k + start, hit->lcs};
    res.violation = triple_violation("sync", shifted, eps, false, 0);
    return res;
  }

  BitLcs engine(sp);
  BitLcs::Row row;
  for (uint64_t t = 0; t < budget.triples; ++t) {
    int64_t x, y, z;
    draw_triple(rng, n, x, y, z);
    ++res.checks;
    const int64_t lc = sampled_triple_lcs(engine, row, sp, 0, x, y, z, maxL);
    if (lc >= 0 && lc >= thr[size_t(z - x)]) {
      res.violation =
          triple_violation("sync", TripleHit{x, y, z, lc}, eps, false, 0);
      return res;
    }
  }
  return res;
}

VerifyResult verify_circle_sampled(const SyncString& s, const Fraction& eps,
                                   const SampleBudget& budget) {
  check_eps(eps);
  VerifyResult res;
  const int64_t n = int64_t(s.size());
  if (n < 2) return res;
  if (n <= budget.window_len) return verify_circle(s, eps);
  const auto thr = sync_thresholds(eps, n);
  const auto maxL = max_len_for_width(thr);
  Rng rng(budget.seed);

  std::vector<Symbol> doubled(s.symbols);
  doubled.insert(doubled.end(), s.symbols.begin(), s.symbols.end());
  std::span<const Symbol> dsp = doubled;
  BitLcs engine(dsp);
  BitLcs::Row row;

  const int64_t wlen = budget.window_len;
  const int64_t r0 = int64_t(rng.below(uint64_t(n)));
  const int64_t start = int64_t(rng.below(uint64_t(n - wlen) + 1));
  if (auto hit = scan_lex(dsp.subspan(size_t(r0 + start), size_t(wlen)), thr,
                          maxL, 1, res.checks)) {
    TripleHit shifted{hit->i + start, hit->j + start, hit->k + start, hit->lcs};
    res.violation = triple_violation("circle", shifted, eps, false, r0);
    return res;
  }

  for (uint64_t t = 0; t < budget.triples; ++t) {
    const int64_t r = int64_t(rng.below(uint64_t(n)));
    int64_t x, y, z;
    draw_triple(rng, n, x, y, z);
    ++res.checks;
    const int64_t lc = sampled_triple_lcs(engine, row, dsp, r, x, y, z, maxL);
    if (lc >= 0 && lc >= thr[size_t(z - x)]) {
      res.violation =
          triple_violation("circle", TripleHit{x, y, z, lc}, eps, false, r);
      return res;
    }
  }
  return res;
}

std::optional<Violation> find_violation_banded(std::span<const Symbol> s,
                                               const std::vector<int64_t>& thr,
                                               int64_t min_len) {
  const int64_t n = int64_t(s.size());
  if (n < 2 || min_len >= n) return std::nullopt;
  const auto maxL = max_len_for_width(thr);
  BitLcs engine(s);
  BitLcs::Row row;
  int64_t bestL = INT64_MAX;
  TripleHit best{};
  bool have = false;
  for (int64_t i = 0; i + 2 <= n; ++i) {
    for (int64_t j = i + 1; j < n; ++j) {
      int64_t kmax = std::min(n, i + maxL[j - i]);
      if (have) kmax = std::min(kmax, i + bestL - 1);
      const int64_t kmin = std::max(j + 1, i + min_len + 1);
      if (kmax < kmin) continue;
      engine.init_row(row, i, j);
      for (int64_t k = j + 1; k <= kmax; ++k) {
        engine.feed(row, s[size_t(k - 1)]);
        if (k < kmin) continue;
        if (row.lcs >= thr[size_t(k - i)]) {
          bestL = k - i;  // always smaller than the previous best by the cap
          best = TripleHit{i, j, k, row.lcs};
          have = true;
          break;  // later k in this row only lengthen the triple
        }
      }
    }
  }
  if (!have) return std::nullopt;
  Violation v;
  v.kind = "sync";
  v.indices = {best.i + 1, best.j + 1, best.k + 1};
  const int64_t L = best.k - best.i;
  v.achieved = Fraction(L - 2 * best.lcs, L);
  v.required = Fraction(0);  // filled by callers that know eps; length drives resampling
  return v;
}

VerifyResult verify_sync_naive(const SyncString& s, const Fraction& eps) {
  return verify_triples_naive(s, eps, false);
}

VerifyResult verify_weak_naive(const SyncString& s, const Fraction& eps) {
  return verify_triples_naive(s, eps, true);
}

int64_t max_self_matching(const SyncString& s, Matching* witness,
                          int64_t bound) {
  const auto sp = s.view();
  const int64_t n = int64_t(sp.size());
  if (n > bound) throw param_error("instance too large for exact search");
  if (witness) witness->pairs.clear();
  if (n == 0) return 0;
  const size_t stride = size_t(n) + 1;
  std::vector<int32_t> M(stride * stride, 0);
  auto at = [&](int64_t x, int64_t y) -> int32_t& {
    return M[size_t(x) * stride + size_t(y)];
  };
  for (int64_t x = 1; x <= n; ++x)
    for (int64_t y = 1; y <= n; ++y) {
      int32_t best = std::max(at(x - 1, y), at(x, y - 1));
      if (x < y && sp[size_t(x - 1)] == sp[size_t(y - 1)])
        best = std::max(best, at(x - 1, y - 1) + 1);
      at(x, y) = best;
    }
  const int64_t size = at(n, n);
  if (witness) {
    int64_t x = n, y = n;
    while (x > 0 && y > 0 && at(x, y) > 0) {
      if (x < y && sp[size_t(x - 1)] == sp[size_t(y - 1)] &&
          at(x, y) == at(x - 1, y - 1) + 1) {
        witness->pairs.push_back({x, y});
        --x;
        --y;
      } else if (at(x - 1, y) == at(x, y)) {
        --x;
      } else {
        --y;
      }
    }
    std::reverse(witness->pairs.begin(), witness->pairs.end());
    witness->check();
  }
  return size;
}

namespace {

class TwinSolver {
 public:
  TwinSolver(std::span<const Symbol> s) : s_(s), n_(int64_t(s.size())) {}

  int32_t solve(int64_t pos, uint64_t q) {
    if (pos == n_) return 0;
    const uint64_t key = (q << 5) | uint64_t(pos);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int len = (63 - std::countl_zero(q)) / 4;
    const uint64_t raw = q ^ (1ULL << (4 * len));
    int32_t best = solve(pos + 1, q);  // position unused
    if (len < kMaxPending && len < n_ - pos) {  // claim s[pos] for the left copy
      const uint64_t pushed = (1ULL << (4 * (len + 1))) | raw |
                              (uint64_t(s_[size_t(pos)]) << (4 * len));
      best = std::max(best, solve(pos + 1, pushed));
    }
    if (len > 0 && Symbol(raw & 0xF) == s_[size_t(pos)]) {  // match the oldest claim
      const uint64_t popped = (1ULL << (4 * (len - 1))) | (raw >> 4);
      best = std::max(best, int32_t(1 + solve(pos + 1, popped)));
    }
    memo_.emplace(key, best);
    return best;
  }

 private:
  static constexpr int kMaxPending = 12;
  std::span<const Symbol> s_;
  int64_t n_;
  std::unordered_map<uint64_t, int32_t> memo_;
};

}  // namespace

int64_t longest_twin(const SyncString& s, int64_t bound) {
  const int64_t n = int64_t(s.size());
  if (n > bound || n > 24)
    throw param_error("instance too large for exact search");
  if (s.alphabet_size > 16)
    throw param_error("alphabet too large for exact twin search");
  if (n == 0) return 0;
  TwinSolver solver(s.view());
  return solver.solve(0, 1);
}

}  // namespace syncstr
