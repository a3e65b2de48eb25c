#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "syncstr/lcs.hpp"
#include "syncstr/rng.hpp"

using namespace syncstr;

namespace {

std::vector<Symbol> random_word(Rng& rng, size_t len, uint64_t sigma) {
  std::vector<Symbol> w(len);
  for (auto& c : w) c = Symbol(rng.below(sigma));
  return w;
}

}  // namespace

TEST_CASE("lcs of known pairs") {
  const auto a = from_literal("abc"), b = from_literal("cba");
  CHECK(lcs_length(a.view(), b.view()) == 1);
  CHECK(lcs_length(from_literal("abcbdab").view(),
                   from_literal("bdcaba").view()) == 4);
  CHECK(lcs_length(from_literal("aaaa").view(), from_literal("aa").view()) == 2);
  CHECK(lcs_length(from_literal("abc").view(), from_literal("abc").view()) == 3);
  CHECK(lcs_length(std::span<const Symbol>{}, a.view()) == 0);
}

TEST_CASE("edit distance of known pairs") {
  CHECK(edit_distance(from_literal("ab").view(), from_literal("ba").view()) == 2);
  CHECK(edit_distance(from_literal("abc").view(), from_literal("abc").view()) == 0);
  CHECK(edit_distance(from_literal("abc").view(), std::span<const Symbol>{}) == 3);
}

TEST_CASE("lcs witness structure and frozen example") {
  const auto a = from_literal("abc"), b = from_literal("cba");
  const auto w = lcs(a.view(), b.view());
  CHECK(w.length == 1);
  REQUIRE(w.matching.pairs.size() == 1);
  CHECK(w.matching.pairs[0].left == 1);
  CHECK(w.matching.pairs[0].right == 3);
}

TEST_CASE("lcs agrees with subsequence enumeration, exhaustive short") {
  // every pair of ternary words of length <= 4
  std::vector<std::vector<Symbol>> words{{}};
  for (size_t len = 1; len <= 4; ++len) {
    const size_t begin = words.size();
    (void)begin;
    std::vector<std::vector<Symbol>> next;
    for (const auto& w : words)
      if (w.size() == len - 1)
        for (Symbol c = 0; c < 3; ++c) {
          auto e = w;
          e.push_back(c);
          next.push_back(std::move(e));
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& a : words)
    for (const auto& b : words)
      CHECK(lcs_length(a, b) == oracles::lcs_enum(a, b));
}

TEST_CASE("lcs and edit distance agree with oracles on random words") {
  Rng rng(2024);
  for (int round = 0; round < 400; ++round) {
    const size_t la = size_t(rng.below(13)), lb = size_t(rng.below(13));
    const uint64_t qa = 2 + rng.below(3), qb = 2 + rng.below(3);
    const auto a = random_word(rng, la, qa);
    const auto b = random_word(rng, lb, qb);
    const int64_t expect = oracles::lcs_enum(a, b);
    CHECK(lcs_length(a, b) == expect);
    CHECK(edit_distance(a, b) == oracles::edit_distance_dp(a, b));
    CHECK(edit_distance(a, b) ==
          int64_t(a.size() + b.size()) - 2 * expect);
  }
}

TEST_CASE("lcs correct across word boundaries") {
  Rng rng(77);
  for (int round = 0; round < 30; ++round) {
    const size_t la = 60 + size_t(rng.below(260));
    const size_t lb = 60 + size_t(rng.below(260));
    const auto a = random_word(rng, la, 4);
    const auto b = random_word(rng, lb, 4);
    // quadratic DP reference
    std::vector<int32_t> prev(lb + 1, 0), cur(lb + 1, 0);
    for (size_t i = 1; i <= la; ++i) {
      for (size_t j = 1; j <= lb; ++j)
        cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                      : std::max(prev[j], cur[j - 1]);
      std::swap(prev, cur);
    }
    CHECK(lcs_length(a, b) == prev[lb]);
  }
}

TEST_CASE("bit rows over windows match subspan lcs") {
  Rng rng(31337);
  const auto subject = random_word(rng, 300, 3);
  BitLcs engine(subject);
  BitLcs::Row row;
  for (int round = 0; round < 200; ++round) {
    int64_t lo = int64_t(rng.below(301));
    int64_t hi = int64_t(rng.below(301));
    if (lo > hi) std::swap(lo, hi);
    const size_t lother = size_t(rng.below(40));
    const auto other = random_word(rng, lother, 3);
    engine.init_row(row, lo, hi);
    for (const Symbol c : other) engine.feed(row, c);
    const std::span<const Symbol> sp(subject);
    CHECK(row.lcs ==
          lcs_length(sp.subspan(size_t(lo), size_t(hi - lo)), other));
  }
}

TEST_CASE("witness is a valid common subsequence of maximal length") {
  Rng rng(555);
  for (int round = 0; round < 200; ++round) {
    const size_t la = size_t(rng.below(25)), lb = size_t(rng.below(25));
    const uint64_t qa = 2 + rng.below(4), qb = 2 + rng.below(4);
    const auto a = random_word(rng, la, qa);
    const auto b = random_word(rng, lb, qb);
    const auto w = lcs(a, b);
    CHECK(w.length == lcs_length(a, b));
    CHECK(int64_t(w.matching.pairs.size()) == w.length);
    w.matching.check();
    for (const auto& p : w.matching.pairs) {
      REQUIRE(p.left >= 1);
      REQUIRE(p.left <= int64_t(a.size()));
      REQUIRE(p.right >= 1);
      REQUIRE(p.right <= int64_t(b.size()));
      CHECK(a[size_t(p.left - 1)] == b[size_t(p.right - 1)]);
    }
  }
}

TEST_CASE("symbols outside either alphabet never match") {
  const std::vector<Symbol> a{1000000, 5, 1000000};
  const std::vector<Symbol> b{1000000, 7};
  CHECK(lcs_length(a, b) == 1);
}
