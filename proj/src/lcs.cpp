#include "syncstr/lcs.hpp"

#include <bit>

#include "syncstr/errors.hpp"

namespace syncstr {

BitLcs::BitLcs(std::span<const Symbol> subject) : n_(int64_t(subject.size())) {
  words_ = int32_t((n_ + 63) / 64);
  if (words_ == 0) words_ = 1;
  for (int64_t p = 0; p < n_; ++p) {
    auto [it, fresh] = id_of_.try_emplace(subject[p], int32_t(id_of_.size()));
    if (fresh) masks_.resize(masks_.size() + size_t(words_), 0);
    masks_[size_t(it->second) * words_ + size_t(p >> 6)] |= 1ULL << (p & 63);
  }
}

void BitLcs::init_row(Row& row, int64_t lo, int64_t hi) const {
  row.lo = lo;
  row.hi = hi;
  row.lcs = 0;
  if (row.v.size() != size_t(words_)) row.v.assign(size_t(words_), 0);
  if (lo >= hi) {  // empty window: nothing to feed against
    row.wlo = 0;
    row.whi = -1;
    row.himask = 0;
    return;
  }
  row.wlo = int32_t(lo >> 6);
  row.whi = int32_t((hi - 1) >> 6);
  row.himask = (hi & 63) ? ((1ULL << (hi & 63)) - 1) : ~0ULL;
  for (int32_t w = row.wlo; w <= row.whi; ++w) row.v[w] = ~0ULL;
  row.v[row.wlo] &= ~((lo & 63) ? ((1ULL << (lo & 63)) - 1) : 0ULL);
  row.v[row.whi] &= row.himask;
}

void BitLcs::feed(Row& row, Symbol y) const {
  if (row.whi < row.wlo) return;
  auto it = id_of_.find(y);
  if (it == id_of_.end()) return;  // symbol absent from subject: V unchanged
  const uint64_t* m = &masks_[size_t(it->second) * words_];
  uint64_t carry = 0, borrow = 0;
  int64_t ones = 0;
  for (int32_t w = row.wlo; w <= row.whi; ++w) {
    uint64_t v = row.v[w];
    uint64_t u = v & m[w];
    unsigned __int128 add = (unsigned __int128)v + u + carry;
    uint64_t add_lo = uint64_t(add);
    carry = uint64_t(add >> 64);
    unsigned __int128 sub = (unsigned __int128)v - u - borrow;
    uint64_t sub_lo = uint64_t(sub);
    borrow = uint64_t(sub >> 64) & 1;
    uint64_t out = add_lo | sub_lo;
    if (w == row.whi) out &= row.himask;
    row.v[w] = out;
    ones += std::popcount(out);
  }
  row.lcs = (row.hi - row.lo) - ones;
}

int64_t lcs_length(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.empty() || b.empty()) return 0;
  // Masks over the shorter side keeps the per-feed word count minimal.
  std::span<const Symbol> x = a.size() <= b.size() ? a : b;
  std::span<const Symbol> y = a.size() <= b.size() ? b : a;
  BitLcs engine(x);
  BitLcs::Row row;
  engine.init_row(row, 0, int64_t(x.size()));
  for (Symbol c : y) engine.feed(row, c);
  return row.lcs;
}

int64_t edit_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
  return int64_t(a.size()) + int64_t(b.size()) - 2 * lcs_length(a, b);
}

LcsWitness lcs(std::span<const Symbol> a, std::span<const Symbol> b) {
  const int64_t m = int64_t(a.size()), n = int64_t(b.size());
  if (m * n > 64ll * 1000 * 1000)
    throw param_error("lcs witness table too large; use lcs_length for sizes this big");
  LcsWitness out;
  if (m == 0 || n == 0) return out;
  // suffix[i][j] = LCS(a[i..], b[j..]) with the classic backward DP
  std::vector<int32_t> suffix(size_t((m + 1) * (n + 1)), 0);
  auto at = [&](int64_t i, int64_t j) -> int32_t& {
    return suffix[size_t(i * (n + 1) + j)];
  };
  for (int64_t i = m - 1; i >= 0; --i)
    for (int64_t j = n - 1; j >= 0; --j)
      at(i, j) = a[i] == b[j] ? at(i + 1, j + 1) + 1
                              : std::max(at(i + 1, j), at(i, j + 1));
  out.length = at(0, 0);
  // Forward greedy: match a[i] at the earliest j that loses nothing. When
  // a[i]==b[j], matching is always optimal (uncrossing), so the first such j
  // reached through no-loss skips gives the least-left, then least-right pair.
  int64_t i = 0, j = 0;
  while (i < m && j < n && at(i, j) > 0) {
    if (a[i] == b[j]) {
      out.matching.pairs.push_back({i + 1, j + 1});
      ++i;
      ++j;
    } else if (at(i, j + 1) == at(i, j)) {
      ++j;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace syncstr
