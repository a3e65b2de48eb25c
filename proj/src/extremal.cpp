#include "syncstr/extremal.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <span>

#include "syncstr/errors.hpp"
#include "syncstr/lcs.hpp"
#include "syncstr/verify.hpp"

namespace syncstr {

namespace {

constexpr int64_t kCap = 256;  // depth cap: positions per search path
constexpr int32_t kWords = 4;  // 64-bit words covering kCap positions
constexpr int64_t kAlpha = 6;  // largest supported alphabet

/* One incremental LCS row for the pair (i, j): the left window S[i..j-1] is
 * fixed once j is on the path, the right window grows with the frontier.
 * Same V-vector recurrence as BitLcs, inlined over at most kWords words and
 * shared absolute position masks. A row can produce a violation only while
 * the triple length L = frontier + 1 - i stays within max_len_for_width of
 * its window width; last_m is the last frontier length where that holds,
 * after which the row rests in its retirement bucket. */
struct SearchRow {
  uint64_t v[kWords];
  int32_t i1 = 0;     // 1-based left endpoint i of the triple (i, j, *)
  int32_t width = 0;  // j - i
  int32_t wlo = 0, whi = 0;
  uint64_t himask = ~0ULL;
  int32_t lcs = 0;
  int32_t last_m = 0;
  int32_t prev = -1, next = -1;  // intrusive live-list links
};

struct RowSave {
  int32_t id = 0;
  int32_t lcs = 0;
  uint64_t v[kWords];
};

struct Level {
  size_t save_begin = 0;
  size_t pool_begin = 0;
  Symbol sym = 0;
};

struct Engine {
  int64_t k;
  std::vector<int64_t> thr;   // triple of length L violates iff lcs >= thr[L]
  std::vector<int64_t> maxl;  // largest violating L per window width
  uint64_t pm[kAlpha][kWords] = {};

  std::vector<SearchRow> pool;  // rows of the current path, stack order
  int32_t live_head = -1;
  std::vector<std::vector<int32_t>> bucket;  // retired rows keyed by last_m
  std::vector<RowSave> saves;

  Symbol s[kCap] = {};
  int64_t used[kCap + 1] = {};  // distinct symbols in s[0..m)
  Level level[kCap + 1] = {};

  int64_t wr_num = 1, wr_den = 1;  // running min of ED/L on accepted triples

  Engine(int64_t k_, const Fraction& eps) : k(k_) {
    thr = sync_thresholds(eps, kCap);
    maxl = max_len_for_width(thr);
    bucket.assign(size_t(kCap) + 1, {});
    pool.reserve(8192);
    saves.reserve(1 << 16);
  }

  void link_front(int32_t id) {
    SearchRow& r = pool[size_t(id)];
    r.prev = -1;
    r.next = live_head;
    if (live_head >= 0) pool[size_t(live_head)].prev = id;
    live_head = id;
  }

  void unlink(int32_t id) {
    SearchRow& r = pool[size_t(id)];
    if (r.prev >= 0)
      pool[size_t(r.prev)].next = r.next;
    else
      live_head = r.next;
    if (r.next >= 0) pool[size_t(r.next)].prev = r.prev;
  }

  void feed(SearchRow& r, const uint64_t* m) {
    uint64_t carry = 0, borrow = 0;
    int64_t ones = 0;
    for (int32_t w = r.wlo; w <= r.whi; ++w) {
      uint64_t v = r.v[w];
      uint64_t u = v & m[w];
      unsigned __int128 add = (unsigned __int128)v + u + carry;
      uint64_t add_lo = uint64_t(add);
      carry = uint64_t(add >> 64);
      unsigned __int128 sub = (unsigned __int128)v - u - borrow;
      uint64_t sub_lo = uint64_t(sub);
      borrow = uint64_t(sub >> 64) & 1;
      uint64_t out = add_lo | sub_lo;
      if (w == r.whi) out &= r.himask;
      r.v[w] = out;
      ones += std::popcount(out);
    }
    r.lcs = int32_t(int64_t(r.width) - ones);
  }

  void offer(int64_t m, const SearchRow& r) {
    const int64_t len = m + 1 - r.i1;
    const int64_t e = len - 2 * int64_t(r.lcs);
    if (e * wr_den < wr_num * len) {
      wr_num = e;
      wr_den = len;
    }
  }

  /* Attempt to extend the accepted path of length m-1 by symbol c, making
   * length m. On acceptance, level[m] holds what undo(m) needs to back the
   * extension out; on rejection the state is already restored. `score`
   * folds the checked triples into the running worst ratio (off during
   * checkpoint replay, whose contributions are already in the baseline). */
  bool try_extend(int64_t m, Symbol c, bool score) {
    Level& lv = level[m];
    lv.save_begin = saves.size();
    lv.pool_begin = pool.size();
    lv.sym = c;
    const int64_t p = m - 1;  // 0-based position of the new symbol
    pm[c][p >> 6] |= 1ULL << (p & 63);
    for (int32_t id : bucket[size_t(m - 1)]) unlink(id);
    bool ok = true;
    // feed live rows: row (i, j) checks the triple (i, j, m+1), L = m+1-i
    for (int32_t id = live_head; id >= 0;) {
      SearchRow& r = pool[size_t(id)];
      const int32_t nx = r.next;
      RowSave& sv = saves.emplace_back();
      sv.id = id;
      sv.lcs = r.lcs;
      std::memcpy(sv.v, r.v, sizeof sv.v);
      feed(r, pm[c]);
      if (r.lcs >= thr[size_t(m + 1 - r.i1)]) {
        ok = false;
        break;
      }
      id = nx;
    }
    // new rows (i, m) for i = 1..m-1: left window [i-1, m-1), right = {c}
    for (int64_t i1 = 1; ok && i1 < m; ++i1) {
      const int32_t id = int32_t(pool.size());
      SearchRow& r = pool.emplace_back();
      r.i1 = int32_t(i1);
      r.width = int32_t(m - i1);
      const int64_t lo = i1 - 1, hi = m - 1;
      r.wlo = int32_t(lo >> 6);
      r.whi = int32_t((hi - 1) >> 6);
      r.himask = (hi & 63) ? ((1ULL << (hi & 63)) - 1) : ~0ULL;
      for (int32_t w = 0; w < kWords; ++w) r.v[w] = 0;
      for (int32_t w = r.wlo; w <= r.whi; ++w) r.v[w] = ~0ULL;
      r.v[r.wlo] &= ~((lo & 63) ? ((1ULL << (lo & 63)) - 1) : 0ULL);
      r.v[r.whi] &= r.himask;
      const int64_t lm = i1 - 1 + maxl[size_t(m - i1)];
      r.last_m = int32_t(std::min(lm, kCap));
      bucket[size_t(r.last_m)].push_back(id);
      link_front(id);
      feed(r, pm[c]);
      if (r.lcs >= thr[size_t(m + 1 - i1)]) ok = false;
    }
    if (!ok) {
      undo(m);
      return false;
    }
    if (score) {
      for (size_t x = lv.save_begin; x < saves.size(); ++x)
        offer(m, pool[size_t(saves[x].id)]);
      for (size_t x = lv.pool_begin; x < pool.size(); ++x) offer(m, pool[x]);
    }
    return true;
  }

  void undo(int64_t m) {
    const Level& lv = level[m];
    // rows born at this level die; LIFO order keeps bucket tails aligned
    while (pool.size() > lv.pool_begin) {
      const int32_t id = int32_t(pool.size() - 1);
      unlink(id);
      bucket[size_t(pool.back().last_m)].pop_back();
      pool.pop_back();
    }
    while (saves.size() > lv.save_begin) {
      const RowSave& sv = saves.back();
      SearchRow& r = pool[size_t(sv.id)];
      std::memcpy(r.v, sv.v, sizeof sv.v);
      r.lcs = sv.lcs;
      saves.pop_back();
    }
    for (int32_t id : bucket[size_t(m - 1)]) link_front(id);
    const int64_t p = m - 1;
    pm[lv.sym][p >> 6] &= ~(1ULL << (p & 63));
  }
};

int64_t small_int(const bigint& b, const char* what) {
  if (b < 0 || b > (bigint(1) << 32))
    throw param_error(std::string(what) + " out of range");
  return b.convert_to<int64_t>();
}

SearchCertificate run_search(int64_t k, const Fraction& eps,
                             int64_t node_budget, const SearchState* st) {
  if (k < 2 || k > kAlpha)
    throw param_error("alphabet size must lie between 2 and 6");
  if (!(Fraction(0) < eps && eps < Fraction(1)))
    throw param_error("eps must lie strictly between 0 and 1");
  if (node_budget < 0) throw param_error("node budget must be >= 0");

  Engine eng(k, eps);
  SearchCertificate cert;
  cert.k = k;
  cert.eps = eps;

  int64_t m = 0;
  int64_t cand[kCap + 1];
  cand[0] = 0;
  int64_t baseline = 0;

  if (st != nullptr) {
    if (int64_t(st->path.size()) > kCap)
      throw param_error("resume path exceeds the depth cap");
    cert.nodes_visited = st->nodes_visited;
    cert.max_length = st->max_length;
    baseline = st->nodes_visited;
    eng.wr_num = small_int(st->worst_ratio_seen.num(), "resume ratio numerator");
    eng.wr_den = small_int(st->worst_ratio_seen.den(), "resume ratio denominator");
    if (eng.wr_den == 0) throw param_error("resume ratio denominator is zero");
    for (Symbol c : st->path) {
      if (int64_t(c) >= std::min(eng.used[m] + 1, k))
        throw param_error("resume path is not canonical");
      if (!eng.try_extend(m + 1, c, false))
        throw param_error("resume path is not a viable search node");
      eng.s[m] = c;
      eng.used[m + 1] = std::max(eng.used[m], int64_t(c) + 1);
      cand[m] = int64_t(c) + 1;
      ++m;
    }
    cand[m] = int64_t(st->next_symbol);
  }

  while (true) {
    const int64_t limit = std::min(eng.used[m] + 1, k);
    if (m == kCap && cand[m] < limit) {
      cert.terminated = false;  // depth cap: nothing provable beyond it
      cert.frontier.assign(eng.s, eng.s + m);
      cert.next_symbol = uint32_t(cand[m]);
      break;
    }
    if (cand[m] >= limit) {
      if (m == 0) {
        cert.terminated = true;
        break;
      }
      eng.undo(m);
      --m;
      continue;
    }
    const Symbol c = Symbol(cand[m]);
    if (cert.nodes_visited - baseline >= node_budget) {
      cert.terminated = false;
      cert.frontier.assign(eng.s, eng.s + m);
      cert.next_symbol = uint32_t(c);
      break;
    }
    cand[m] = int64_t(c) + 1;
    ++cert.nodes_visited;
    if (eng.try_extend(m + 1, c, true)) {
      eng.s[m] = c;
      eng.used[m + 1] = std::max(eng.used[m], int64_t(c) + 1);
      ++m;
      cand[m] = 0;
      if (m > cert.max_length) cert.max_length = m;
    }
  }
  cert.worst_ratio_seen = Fraction(eng.wr_num, eng.wr_den);
  return cert;
}

}  // namespace

SearchCertificate search_bk(int64_t k, const Fraction& eps,
                            int64_t node_budget) {
  return run_search(k, eps, node_budget, nullptr);
}

SearchCertificate search_bk_resume(int64_t k, const Fraction& eps,
                                   int64_t node_budget,
                                   const SearchState& state) {
  return run_search(k, eps, node_budget, &state);
}

RatioWitness worst_ratio(int64_t k, int64_t len) {
  if (k < 1) throw param_error("alphabet size must be >= 1");
  if (len < 1) throw param_error("length must be >= 1");
  if (len > 64) throw budget_error("worst_ratio scan is capped at length 64");
  bigint reach = 1;
  for (int64_t i = 0; i < len; ++i) {
    reach *= k;
    if (reach > (bigint(1) << 22))
      throw budget_error("worst_ratio: k^len exceeds the exhaustive budget");
  }

  std::vector<Symbol> cur(size_t(len), 0);
  std::vector<int64_t> cand(size_t(len) + 1, 0), used(size_t(len) + 1, 0);
  RatioWitness best;
  best.ratio = Fraction(-1);  // below every score; first string always lands

  int64_t m = 0;
  while (true) {
    if (m == len) {
      // score: min over triples (i, j, kk) of ED / (kk - i), lex-first argmin
      int64_t sn = 1, sd = 1, bi = 0, bj = 0, bk = 0;
      bool have = false;
      BitLcs engine{std::span<const Symbol>(cur)};
      BitLcs::Row row;
      for (int64_t i0 = 0; i0 + 1 < len; ++i0)
        for (int64_t j0 = i0 + 1; j0 < len; ++j0) {
          engine.init_row(row, i0, j0);
          for (int64_t k0 = j0 + 1; k0 <= len; ++k0) {
            engine.feed(row, cur[size_t(k0 - 1)]);
            const int64_t fl = k0 - i0;
            const int64_t e = fl - 2 * row.lcs;
            if (!have || e * sd < sn * fl) {
              have = true;
              sn = e;
              sd = fl;
              bi = i0 + 1;
              bj = j0 + 1;
              bk = k0 + 1;
            }
          }
        }
      const Fraction score = have ? Fraction(sn, sd) : Fraction(1);
      if (best.ratio < score) {
        best.ratio = score;
        best.witness = cur;
        best.i = bi;
        best.j = bj;
        best.k = bk;
      }
      --m;
      continue;
    }
    const int64_t limit = std::min(used[size_t(m)] + 1, k);
    if (cand[size_t(m)] >= limit) {
      if (m == 0) break;
      --m;
      continue;
    }
    const int64_t c = cand[size_t(m)]++;
    cur[size_t(m)] = Symbol(c);
    used[size_t(m) + 1] = std::max(used[size_t(m)], c + 1);
    ++m;
    cand[size_t(m)] = 0;
  }
  return best;
}

}  // namespace syncstr
