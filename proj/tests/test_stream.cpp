#include <cstdint>
#include <vector>

#include "doctest.h"
#include "syncstr/errors.hpp"
#include "syncstr/rng.hpp"
#include "syncstr/stream.hpp"
#include "syncstr/verify.hpp"

using namespace syncstr;

namespace {

StreamConfig half_config(uint64_t seed) {
  StreamConfig cfg;
  cfg.eps = Fraction(1, 2);
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("stream config derived values") {
  StreamConfig cfg = half_config(0);
  CHECK(cfg.k() == 8);
  CHECK(cfg.q() == 512);  // sigma at eps/2 = 1/4
  cfg.eps = Fraction(1, 4);
  CHECK(cfg.k() == 16);
  CHECK(cfg.q() == 2048);
  cfg.eps = Fraction(2, 3);
  CHECK(cfg.k() == 6);
  CHECK(cfg.q() == 288);
  cfg.eps = Fraction(1);
  CHECK_THROWS_AS(cfg.validate(), param_error);
  cfg.eps = Fraction(0);
  CHECK_THROWS_AS(cfg.validate(), param_error);
}

TEST_CASE("block arithmetic at k=8") {
  const StreamConfig cfg = half_config(0);

  BlockLocator loc = locate(100, cfg);
  CHECK(loc.t == 3);
  CHECK(loc.offset == 28);  // l_2 = 72
  CHECK(loc.start == 73);
  CHECK(loc.length == 512);

  loc = locate(8, cfg);
  CHECK(loc.t == 1);
  CHECK(loc.offset == 8);

  loc = locate(73, cfg);
  CHECK(loc.t == 3);
  CHECK(loc.offset == 1);

  loc = locate(72, cfg);
  CHECK(loc.t == 2);
  CHECK(loc.offset == 64);

  loc = locate(1, cfg);
  CHECK(loc.t == 1);
  CHECK(loc.offset == 1);
  CHECK(loc.start == 1);

  CHECK_THROWS_AS(locate(0, cfg), param_error);

  /* positions 1..600 against an independent running sum of block lengths */
  int64_t start = 1, len = 8;
  for (int64_t pos = 1; pos <= 600; ++pos) {
    if (pos > start + len - 1) {
      start += len;
      len *= 8;
    }
    const BlockLocator l = locate(pos, cfg);
    CHECK(l.start == start);
    CHECK(l.length == len);
    CHECK(l.offset == pos - start + 1);
  }
}

/* unit tests stay within the first three blocks (l_3 = 584); block 4 is
 * 4096 long and is exercised with a reduced sampling budget below */
TEST_CASE("stream windows equal the materialized prefix") {
  Stream st(half_config(7));
  const SyncString pre = st.prefix(584);
  CHECK(pre.size() == 584);
  CHECK(pre.alphabet_size == 1024);
  pre.check();

  /* small cache forces rebuilds; results must not move */
  StreamConfig tight = half_config(7);
  tight.cache_blocks = 1;
  Stream small(tight);
  Rng rng(99);
  for (int round = 0; round < 100; ++round) {
    const int64_t len = 1 + int64_t(rng.below(64));
    const int64_t pos = 1 + int64_t(rng.below(uint64_t(584 - len)));
    const SyncString w = small.window(pos, len);
    REQUIRE(int64_t(w.size()) == len);
    for (int64_t i = 0; i < len; ++i)
      CHECK(w.symbols[size_t(i)] == pre.symbols[size_t(pos - 1 + i)]);
  }
  for (int64_t pos : {1, 8, 9, 72, 73, 100, 584}) {
    CHECK(small.symbol_at(pos) == pre.symbols[size_t(pos - 1)]);
  }
}

TEST_CASE("stream banks alternate by block parity") {
  Stream st(half_config(3));
  const SyncString pre = st.prefix(584);
  for (int64_t pos = 1; pos <= 8; ++pos)  // block 1: lower bank
    CHECK(pre.symbols[size_t(pos - 1)] < 512);
  for (int64_t pos = 9; pos <= 72; ++pos)  // block 2: upper bank
    CHECK(pre.symbols[size_t(pos - 1)] >= 512);
  for (int64_t pos = 73; pos <= 584; ++pos)  // block 3: lower bank
    CHECK(pre.symbols[size_t(pos - 1)] < 512);

  /* a window across the first boundary mixes both banks */
  const SyncString mixed = st.window(5, 8);
  bool low = false, high = false;
  for (Symbol c : mixed.symbols) (c < 512 ? low : high) = true;
  CHECK(low);
  CHECK(high);
}

TEST_CASE("stream window edge cases and composition") {
  Stream st(half_config(11));
  CHECK(st.window(40, 0).size() == 0);
  for (int64_t pos : {1LL, 7LL, 70LL, 100LL}) {
    const SyncString whole = st.window(pos, 13);
    const SyncString head = st.window(pos, 1);
    const SyncString rest = st.window(pos + 1, 12);
    std::vector<Symbol> glued = head.symbols;
    glued.insert(glued.end(), rest.symbols.begin(), rest.symbols.end());
    CHECK(whole.symbols == glued);
  }
  CHECK_THROWS_AS(st.window(0, 5), param_error);
  CHECK_THROWS_AS(st.window(5, -1), param_error);
}

TEST_CASE("stream prefix passes the triple check") {
  Stream st(half_config(7));
  const SyncString pre = st.prefix(584);
  CHECK(verify_sync(pre, Fraction(1, 2)).pass());
}

TEST_CASE("stream build metadata") {
  Stream st(half_config(7));
  (void)st.prefix(584);
  const std::vector<BlockInfo> blocks = st.built_blocks();
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].t == 1);
  CHECK(blocks[0].length == 8);
  CHECK(blocks[1].length == 64);
  CHECK(blocks[2].length == 512);
  for (const BlockInfo& b : blocks) {
    CHECK(b.source == "lll");
    CHECK(b.fully_verified);
  }
}

TEST_CASE("stream determinism and seed sensitivity") {
  Stream a(half_config(21));
  Stream b(half_config(21));
  Stream c(half_config(22));
  const SyncString pa = a.prefix(300);
  CHECK(pa.symbols == b.prefix(300).symbols);
  CHECK(pa.symbols != c.prefix(300).symbols);
}

TEST_CASE("stream sampled block path") {
  StreamConfig cfg = half_config(5);
  cfg.full_verify_threshold = 100;  // blocks 3 and 4 go sampled
  cfg.sample_triples = 5000;
  Stream st(cfg);
  const SyncString pre = st.prefix(600);  // crosses into block 4
  pre.check();
  const std::vector<BlockInfo> blocks = st.built_blocks();
  REQUIRE(blocks.size() == 4);
  CHECK(blocks[0].source == "lll");
  CHECK(blocks[1].source == "lll");
  CHECK(blocks[2].source == "lll-sampled");
  CHECK(blocks[3].source == "lll-sampled");
  CHECK(blocks[3].length == 4096);
  CHECK_FALSE(blocks[2].fully_verified);
  /* block 4 is even: upper bank */
  CHECK(st.symbol_at(585) >= 512);
  /* the sampled-built block still satisfies the full check here */
  CHECK(verify_sync(st.window(73, 512), Fraction(1, 4)).pass());
}

TEST_CASE("stream materialization bound") {
  StreamConfig cfg = half_config(1);
  cfg.max_block_len = 100;
  Stream st(cfg);
  CHECK(st.symbol_at(72) < 1024);  // blocks 1..2 fine
  CHECK_THROWS_AS(st.symbol_at(73), param_error);

  /* default bound: block 8 (8^8 symbols) is past the guard, and the guard
   * fires before any construction work */
  Stream big(half_config(1));
  const int64_t l7 = 8 + 64 + 512 + 4096 + 32768 + 262144 + 2097152;
  CHECK_THROWS_AS(big.symbol_at(l7 + 1), param_error);
}
