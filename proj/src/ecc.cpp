#include "syncstr/ecc.hpp"

#include <algorithm>
#include <string>

#include "syncstr/errors.hpp"

namespace syncstr {

namespace {

int64_t hamming(std::span<const Symbol> a, std::span<const Symbol> b) {
  int64_t d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t q) { return a * b % q; }

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t q) {
  uint64_t r = 1 % q;
  base %= q;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, q);
    base = mulmod(base, base, q);
    exp >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t q) { return powmod(a, q - 2, q); }

}  // namespace

void BlockCode::validate() const {
  if (m < 1) throw param_error("code block length must be positive");
  if (q < 1) throw param_error("code alphabet must be positive");
  if (d < 1 || d > m) throw param_error("code distance must lie in [1, m]");
  for (const auto& w : codewords) {
    if (int64_t(w.size()) != m)
      throw param_error("codeword length differs from the block length");
    for (const Symbol c : w)
      if (uint64_t(c) >= q) throw param_error("codeword symbol out of range");
  }
}

int64_t BlockCode::measured_distance() const {
  validate();
  const int64_t count = int64_t(codewords.size());
  if (count < 2) throw param_error("distance needs at least two codewords");
  if (count * count > (1LL << 26))
    throw param_error("too many codewords for exact distance measurement");
  int64_t best = m;
  for (int64_t i = 0; i < count; ++i)
    for (int64_t j = i + 1; j < count; ++j)
      best = std::min(best, hamming(codewords[size_t(i)], codewords[size_t(j)]));
  return best;
}

GreedyResult greedy_code_forced(int64_t m, uint64_t q, int64_t d,
                                const bigint& target) {
  if (m < 1) throw param_error("block length must be positive");
  if (q < 2) throw param_error("alphabet must have at least two symbols");
  if (d < 1 || d > m) throw param_error("distance must lie in [1, m]");
  bigint space = 1;
  for (int64_t i = 0; i < m; ++i) {
    space *= q;
    if (space > (bigint(1) << 24))
      throw param_error("greedy enumeration space exceeds 2^24 words");
  }
  GreedyResult res;
  res.target = target;
  res.code.m = m;
  res.code.q = q;
  res.code.d = d;
  auto& kept = res.code.codewords;
  std::vector<Symbol> word(static_cast<size_t>(m), 0);
  for (;;) {
    if (target > 0 && bigint(int64_t(kept.size())) >= target) break;
    bool fits = true;
    for (const auto& prev : kept)
      if (hamming(prev, word) < d) {
        fits = false;
        break;
      }
    if (fits) kept.push_back(word);
    // lexicographic odometer
    int64_t pos = m - 1;
    while (pos >= 0 && word[size_t(pos)] == Symbol(q - 1)) {
      word[size_t(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++word[size_t(pos)];
  }
  res.reached = target <= 0 || bigint(int64_t(kept.size())) >= target;
  return res;
}

GreedyResult greedy_code(int64_t m, const Fraction& eps) {
  if (!(Fraction(0) < eps) || !(eps <= Fraction(1)))
    throw param_error("eps must lie in (0, 1], got " + eps.str());
  const Fraction two_e(543657, 100000);  // rational upper bound of 2e
  const uint64_t q = (two_e / eps).ceil().convert_to<uint64_t>();
  const int64_t d = ((Fraction(1) - eps) * Fraction(m)).ceil().convert_to<long long>();
  const bigint target = floor_pow2(eps * Fraction(m));
  return greedy_code_forced(m, q, std::max<int64_t>(d, 1), target);
}

std::vector<Symbol> rs_encode(int64_t m, int64_t k, uint64_t q,
                              std::span<const Symbol> message) {
  if (m < 1 || k < 1 || k > m) throw param_error("need 1 <= k <= m");
  if (q > (1ULL << 22)) throw param_error("alphabet too large");
  if (q < uint64_t(m) || !is_prime(q))
    throw param_error("alphabet must be a prime at least the block length");
  if (int64_t(message.size()) != k)
    throw param_error("message length differs from k");
  for (const Symbol c : message)
    if (uint64_t(c) >= q) throw param_error("message symbol out of range");

  /* Values at points 0..k-1 are the message; extend by the interpolating
   * polynomial of degree < k through them (Lagrange over F_q). */
  std::vector<Symbol> out(static_cast<size_t>(m));
  for (int64_t i = 0; i < k; ++i) out[size_t(i)] = message[size_t(i)];
  for (int64_t x = k; x < m; ++x) {
    uint64_t acc = 0;
    for (int64_t i = 0; i < k; ++i) {
      uint64_t numer = 1, denom = 1;
      for (int64_t j = 0; j < k; ++j) {
        if (j == i) continue;
        numer = mulmod(numer, uint64_t((x - j + int64_t(q)) % int64_t(q)), q);
        denom = mulmod(denom, uint64_t((i - j + int64_t(q)) % int64_t(q)), q);
      }
      const uint64_t term =
          mulmod(mulmod(message[size_t(i)], numer, q), invmod(denom, q), q);
      acc = (acc + term) % q;
    }
    out[size_t(x)] = Symbol(acc);
  }
  return out;
}

BlockCode rs_first(int64_t m, int64_t k, uint64_t q, int64_t count) {
  if (count < 0) throw param_error("count must be nonnegative");
  bigint space = 1;
  for (int64_t i = 0; i < k; ++i) space *= q;
  if (bigint(count) > space)
    throw param_error("requested more codewords than messages exist");
  BlockCode code;
  code.m = m;
  code.q = q;
  code.d = m - k + 1;
  code.codewords.reserve(size_t(count));
  std::vector<Symbol> msg(static_cast<size_t>(k), 0);
  for (int64_t idx = 0; idx < count; ++idx) {
    code.codewords.push_back(rs_encode(m, k, q, msg));
    int64_t pos = k - 1;
    while (pos >= 0 && msg[size_t(pos)] == Symbol(q - 1)) {
      msg[size_t(pos)] = 0;
      --pos;
    }
    if (pos >= 0) ++msg[size_t(pos)];
  }
  return code;
}

BlockCode rs_code(int64_t m, int64_t k, uint64_t q) {
  if (m < 1 || k < 1 || k > m) throw param_error("need 1 <= k <= m");
  bigint space = 1;
  for (int64_t i = 0; i < k; ++i) {
    space *= q;
    if (space > (bigint(1) << 22))
      throw param_error("too many codewords to materialize; take a prefix");
  }
  return rs_first(m, k, q, space.convert_to<long long>());
}

BlockCode concat_code(const BlockCode& outer, const BlockCode& inner) {
  outer.validate();
  inner.validate();
  if (inner.codewords.size() < outer.q)
    throw param_error("inner code too small to index the outer alphabet: " +
                      std::to_string(inner.codewords.size()) + " < " +
                      std::to_string(outer.q));
  BlockCode code;
  code.m = outer.m * inner.m;
  code.q = inner.q;
  code.d = outer.d * inner.d;
  code.codewords.reserve(outer.codewords.size());
  for (const auto& ow : outer.codewords) {
    std::vector<Symbol> word;
    word.reserve(size_t(code.m));
    for (const Symbol a : ow) {
      const auto& iw = inner.codewords[size_t(a)];
      word.insert(word.end(), iw.begin(), iw.end());
    }
    code.codewords.push_back(std::move(word));
  }
  return code;
}

std::optional<int64_t> decode_half_errors(const BlockCode& code,
                                          std::span<const int64_t> received) {
  code.validate();
  if (int64_t(received.size()) != code.m)
    throw param_error("received word length differs from the block length");
  for (const int64_t r : received)
    if (r < -1 || (r >= 0 && uint64_t(r) >= code.q))
      throw param_error("received symbol out of range");
  int64_t best_score = INT64_MAX, best_index = -1;
  bool tie = false;
  for (int64_t idx = 0; idx < int64_t(code.codewords.size()); ++idx) {
    const auto& w = code.codewords[size_t(idx)];
    int64_t score = 0;
    for (int64_t p = 0; p < code.m; ++p) {
      const int64_t r = received[size_t(p)];
      if (r < 0)
        score += 1;  // erasure
      else if (Symbol(r) != w[size_t(p)])
        score += 2;  // disagreement
    }
    if (score < best_score) {
      best_score = score;
      best_index = idx;
      tie = false;
    } else if (score == best_score) {
      tie = true;
    }
  }
  if (best_index < 0 || tie || best_score >= code.d) return std::nullopt;
  return best_index;
}

}  // namespace syncstr
