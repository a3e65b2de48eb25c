#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "syncstr/codec.hpp"
#include "syncstr/ecc.hpp"
#include "syncstr/errors.hpp"
#include "syncstr/sampler.hpp"
#include "syncstr/verify.hpp"

using namespace syncstr;

namespace {

SyncString distinct_string(int64_t n) {
  SyncString s;
  s.alphabet_size = uint64_t(n);
  for (int64_t i = 0; i < n; ++i) s.symbols.push_back(Symbol(i));
  return s;
}

TEST_CASE("encode pairs the codeword with the index string") {
  const BlockCode code = rs_code(6, 2, 7);
  REQUIRE(code.codewords.size() == 49);
  const SyncString s = distinct_string(6);

  const IndexedWord w = encode(5, code, s);
  CHECK(w.payload == code.codewords[5]);
  CHECK(w.index == s.symbols);
  CHECK(w.size() == 6);

  BlockCode one;
  one.m = 3;
  one.q = 2;
  one.d = 3;
  one.codewords = {{0, 1, 0}};
  const IndexedWord v = encode(0, one, distinct_string(3));
  CHECK(v.payload == std::vector<Symbol>{0, 1, 0});
  CHECK(v.index == std::vector<Symbol>{0, 1, 2});

  CHECK_THROWS_AS(encode(0, code, distinct_string(5)), param_error);
  CHECK_THROWS_AS(encode(49, code, s), param_error);
  CHECK_THROWS_AS(encode(-1, code, s), param_error);
}

TEST_CASE("transmit applies deletions then insertions in order") {
  IndexedWord w;
  w.payload = {10, 11, 12, 13, 14, 15};
  w.index = {0, 1, 2, 3, 4, 5};

  const IndexedWord same = transmit(w, {});
  CHECK(same.payload == w.payload);
  CHECK(same.index == w.index);

  ChannelTrace all;
  all.deletions = {1, 2, 3, 4, 5, 6};
  CHECK(transmit(w, all).size() == 0);

  ChannelTrace two;
  two.deletions = {2, 5};
  const IndexedWord r = transmit(w, two);
  CHECK(r.payload == std::vector<Symbol>{10, 12, 13, 15});
  CHECK(r.index == std::vector<Symbol>{0, 2, 3, 5});

  ChannelTrace ins;
  ins.deletions = {2};
  ins.insertions = {{1, 99, 9}, {7, 98, 8}};  // front, then append
  const IndexedWord ri = transmit(w, ins);
  CHECK(ri.payload == std::vector<Symbol>{99, 10, 12, 13, 14, 15, 98});
  CHECK(ri.index == std::vector<Symbol>{9, 0, 2, 3, 4, 5, 8});

  for (std::vector<int64_t> bad :
       {std::vector<int64_t>{0}, {7}, {2, 2}, {3, 2}}) {
    ChannelTrace t;
    t.deletions = bad;
    CHECK_THROWS_AS(transmit(w, t), param_error);
  }
  ChannelTrace oob;
  oob.insertions = {{8, 0, 0}};  // length 6: positions 1..7 only
  CHECK_THROWS_AS(transmit(w, oob), param_error);
  oob.insertions = {{0, 0, 0}};
  CHECK_THROWS_AS(transmit(w, oob), param_error);

  IndexedWord ragged;
  ragged.payload = {1};
  CHECK_THROWS_AS(transmit(ragged, {}), param_error);
}

TEST_CASE("recovered indices follow the surviving positions") {
  const SyncString s = distinct_string(6);
  IndexedWord w;
  w.payload = {20, 21, 22, 23, 24, 25};
  w.index = s.symbols;

  CHECK(recover_indices(w, s) == std::vector<int64_t>{1, 2, 3, 4, 5, 6});

  // repeats in the index string still yield the identity on a clean channel
  SyncString rep;
  rep.alphabet_size = 2;
  rep.symbols = {0, 1, 0, 1, 0};
  IndexedWord wr;
  wr.payload = {1, 2, 3, 4, 5};
  wr.index = rep.symbols;
  CHECK(recover_indices(wr, rep) == std::vector<int64_t>{1, 2, 3, 4, 5});

  ChannelTrace t;
  t.deletions = {3};
  const IndexedWord r = transmit(w, t);
  CHECK(recover_indices(r, s) == std::vector<int64_t>{1, 2, 4, 5, 6});

  // every assigned entry strictly increases across received positions
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const ChannelTrace tr = random_deletions(6, 3, seed);
    const std::vector<int64_t> a = recover_indices(transmit(w, tr), s);
    int64_t prev = 0;
    for (int64_t x : a) {
      if (x == 0) continue;
      CHECK(x > prev);
      prev = x;
    }
  }
}

TEST_CASE("zero-deletion round-trip over the whole message space") {
  const BlockCode code = rs_code(6, 2, 7);
  const SyncString s = distinct_string(6);
  for (int64_t msg = 0; msg < int64_t(code.codewords.size()); ++msg) {
    const auto got = decode(transmit(encode(msg, code, s), {}), code, s);
    REQUIRE(got.has_value());
    CHECK(*got == msg);
  }
}

TEST_CASE("deletion budget follows the distance and eps0") {
  const BlockCode code = rs_code(60, 2, 61);
  REQUIRE(code.d == 59);
  CHECK(deletion_budget(code, Fraction(1, 2)) == 19);   // floor(58/3)
  CHECK(deletion_budget(code, Fraction(1, 3)) == 29);   // floor(58/2)
  CHECK(deletion_budget(code, Fraction(9, 10)) == 3);   // floor(58/19)
  BlockCode weak;
  weak.d = 1;
  CHECK(deletion_budget(weak, Fraction(1, 2)) == 0);
  CHECK_THROWS_AS(deletion_budget(code, Fraction(0)), param_error);
  CHECK_THROWS_AS(deletion_budget(code, Fraction(1)), param_error);
  weak.d = 0;
  CHECK_THROWS_AS(deletion_budget(weak, Fraction(1, 2)), param_error);

  int64_t prev = 1000;
  for (int64_t num = 1; num < 10; ++num) {
    const int64_t b = deletion_budget(code, Fraction(num, 10));
    CHECK(b <= prev);
    prev = b;
  }
}

TEST_CASE("every in-budget deletion trace decodes to the message") {
  const Fraction eps0(1, 2);
  const auto built = construct_lll(SamplerParams{eps0}, 60, 7);
  REQUIRE(built.fully_verified);
  const SyncString& s = built.s;
  const BlockCode code = rs_code(60, 2, 61);
  const int64_t budget = deletion_budget(code, eps0);
  REQUIRE(budget == 19);

  const int64_t msg = 1717;
  const IndexedWord sent = encode(msg, code, s);
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    const int64_t count = int64_t(seed % uint64_t(budget + 1));
    const ChannelTrace tr = random_deletions(60, count, seed);
    const IndexedWord got = transmit(sent, tr);
    CHECK(int64_t(got.size()) == 60 - count);

    // half-error accounting against the true codeword stays within d-1
    const std::vector<int64_t> assigned = recover_indices(got, s);
    std::vector<int64_t> tentative(60, -1);
    for (size_t r = 0; r < assigned.size(); ++r)
      if (assigned[r] != 0)
        tentative[size_t(assigned[r] - 1)] = int64_t(got.payload[r]);
    int64_t mis = 0, erased = 0;
    for (size_t p = 0; p < 60; ++p) {
      if (tentative[p] == -1)
        ++erased;
      else if (tentative[p] != int64_t(code.codewords[size_t(msg)][p]))
        ++mis;
    }
    CHECK(2 * mis + erased <= code.d - 1);

    const auto out = decode(got, code, s);
    REQUIRE(out.has_value());
    CHECK(*out == msg);
  }
}

TEST_CASE("a single inserted pair is shrugged off") {
  const auto built = construct_lll(SamplerParams{Fraction(1, 2)}, 60, 7);
  const SyncString& s = built.s;
  const BlockCode code = rs_code(60, 2, 61);
  const int64_t msg = 301;

  // the inserted duplicate of s[11] cannot join the monotone matching: the
  // original index sequence survives intact and matches in full
  ChannelTrace tr;
  tr.insertions = {{1, 42, s.symbols[10]}};
  const IndexedWord got = transmit(encode(msg, code, s), tr);
  CHECK(got.size() == 61);
  const std::vector<int64_t> assigned = recover_indices(got, s);
  CHECK(assigned[0] == 0);
  for (size_t r = 1; r < assigned.size(); ++r)
    CHECK(assigned[r] == int64_t(r));
  const auto out = decode(got, code, s);
  REQUIRE(out.has_value());
  CHECK(*out == msg);
}

TEST_CASE("out-of-contract channels may fail but never misbehave") {
  const auto built = construct_lll(SamplerParams{Fraction(1, 2)}, 60, 7);
  const SyncString& s = built.s;
  const BlockCode code = rs_code(60, 2, 61);
  const IndexedWord sent = encode(2222, code, s);

  int64_t failures = 0;
  for (uint64_t seed = 100; seed < 120; ++seed) {
    const ChannelTrace tr = random_deletions(60, 45, seed);
    const auto out = decode(transmit(sent, tr), code, s);
    if (!out.has_value()) {
      ++failures;
      continue;
    }
    CHECK(*out >= 0);
    CHECK(*out < int64_t(code.codewords.size()));
  }
  MESSAGE("45-deletion failures: ", failures, "/20");

  // mixed insertion + deletion smoke: decode returns without throwing
  for (uint64_t seed = 200; seed < 210; ++seed) {
    ChannelTrace tr = random_deletions(60, 5, seed);
    tr.insertions = {{3, Symbol(seed % 61), Symbol(seed % 128)},
                     {20, Symbol(seed % 7), Symbol((seed * 3) % 128)}};
    CHECK_NOTHROW(decode(transmit(sent, tr), code, s));
  }
}

TEST_CASE("random deletion traces are reproducible and well-formed") {
  const ChannelTrace a = random_deletions(100, 30, 5);
  const ChannelTrace b = random_deletions(100, 30, 5);
  CHECK(a.deletions == b.deletions);
  CHECK(a.deletions.size() == 30);
  CHECK(random_deletions(100, 30, 6).deletions != a.deletions);

  std::set<int64_t> seen(a.deletions.begin(), a.deletions.end());
  CHECK(seen.size() == 30);
  CHECK(*seen.begin() >= 1);
  CHECK(*seen.rbegin() <= 100);
  CHECK(std::is_sorted(a.deletions.begin(), a.deletions.end()));

  CHECK(random_deletions(5, 0, 1).deletions.empty());
  CHECK(random_deletions(5, 5, 1).deletions ==
        std::vector<int64_t>{1, 2, 3, 4, 5});
  CHECK_THROWS_AS(random_deletions(5, 6, 1), param_error);
  CHECK_THROWS_AS(random_deletions(5, -1, 1), param_error);
  CHECK_THROWS_AS(random_deletions(-1, 0, 1), param_error);
}

}  // namespace
