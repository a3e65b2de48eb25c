#include "syncstr/codec.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <span>

#include "syncstr/errors.hpp"
#include "syncstr/lcs.hpp"
#include "syncstr/rng.hpp"

namespace syncstr {

IndexedWord encode(int64_t message, const BlockCode& code,
                   const SyncString& s) {
  if (code.m != int64_t(s.size()))
    throw param_error("code block length and index string length differ");
  if (message < 0 || message >= int64_t(code.codewords.size()))
    throw param_error("message is not a codeword index");
  IndexedWord w;
  w.payload = code.codewords[size_t(message)];
  w.index = s.symbols;
  return w;
}

IndexedWord transmit(const IndexedWord& w, const ChannelTrace& trace) {
  if (w.payload.size() != w.index.size())
    throw param_error("indexed word components differ in length");
  const int64_t n = int64_t(w.payload.size());
  int64_t prev = 0;
  for (int64_t p : trace.deletions) {
    if (p <= prev || p > n)
      throw param_error(
          "deletions must be strictly increasing positions within [1, n]");
    prev = p;
  }
  IndexedWord out;
  out.payload.reserve(w.payload.size());
  out.index.reserve(w.index.size());
  size_t di = 0;
  for (int64_t p = 1; p <= n; ++p) {
    if (di < trace.deletions.size() && trace.deletions[di] == p) {
      ++di;
      continue;
    }
    out.payload.push_back(w.payload[size_t(p - 1)]);
    out.index.push_back(w.index[size_t(p - 1)]);
  }
  for (const Insertion& ins : trace.insertions) {
    const int64_t len = int64_t(out.payload.size());
    if (ins.pos < 1 || ins.pos > len + 1)
      throw param_error("insertion position out of range");
    out.payload.insert(out.payload.begin() + (ins.pos - 1), ins.payload);
    out.index.insert(out.index.begin() + (ins.pos - 1), ins.index);
  }
  return out;
}

std::vector<int64_t> recover_indices(const IndexedWord& received,
                                     const SyncString& s) {
  if (received.payload.size() != received.index.size())
    throw param_error("indexed word components differ in length");
  const LcsWitness wit = lcs(std::span<const Symbol>(received.index), s.view());
  wit.matching.check();
  std::vector<int64_t> out(received.index.size(), 0);
  for (const MatchPair& pr : wit.matching.pairs)
    out[size_t(pr.left - 1)] = pr.right;
  return out;
}

std::optional<int64_t> decode(const IndexedWord& received,
                              const BlockCode& code, const SyncString& s) {
  if (code.m != int64_t(s.size()))
    throw param_error("code block length and index string length differ");
  const std::vector<int64_t> assigned = recover_indices(received, s);
  std::vector<int64_t> tentative(size_t(code.m), -1);
  for (size_t r = 0; r < assigned.size(); ++r) {
    if (assigned[r] == 0) continue;
    // a monotone matching hits each position of s at most once
    assert(tentative[size_t(assigned[r] - 1)] == -1);
    tentative[size_t(assigned[r] - 1)] = int64_t(received.payload[r]);
  }
  return decode_half_errors(code, tentative);
}

int64_t deletion_budget(const BlockCode& code, const Fraction& eps0) {
  if (!(Fraction(0) < eps0 && eps0 < Fraction(1)))
    throw param_error("eps0 must lie strictly between 0 and 1");
  if (code.d < 1) throw param_error("code distance must be >= 1");
  const Fraction t =
      Fraction(code.d - 1) * (Fraction(1) - eps0) / (Fraction(1) + eps0);
  return t.floor().convert_to<int64_t>();
}

ChannelTrace random_deletions(int64_t n, int64_t count, uint64_t seed) {
  if (n < 0) throw param_error("word length must be >= 0");
  if (count < 0 || count > n)
    throw param_error("deletion count must lie in [0, n]");
  Rng rng(seed);
  std::vector<int64_t> pos(static_cast<size_t>(n));
  std::iota(pos.begin(), pos.end(), int64_t(1));
  for (int64_t i = 0; i < count; ++i)
    std::swap(pos[size_t(i)],
              pos[size_t(i + int64_t(rng.below(uint64_t(n - i))))]);
  ChannelTrace trace;
  trace.deletions.assign(pos.begin(), pos.begin() + count);
  std::sort(trace.deletions.begin(), trace.deletions.end());
  return trace;
}

}  // namespace syncstr
