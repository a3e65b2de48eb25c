#pragma once

#include <cstdint>
#include <list>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "syncstr/fraction.hpp"
#include "syncstr/sync_string.hpp"

namespace syncstr {

/* The block stream: block t (t = 1, 2, ...) has length k^t and occupies
 * positions l_{t-1}+1 .. l_t where l_t = (k^{t+1} - k)/(k - 1). Every block
 * is built independently at quality eps/2 from a seed mixed with t, and
 * consecutive blocks live in disjoint symbol banks of size q each: odd t in
 * [0, q), even t in [q, 2q). */
struct StreamConfig {
  Fraction eps;
  uint64_t seed = 0;
  int64_t full_verify_threshold = 1500;  // larger blocks get sampled gates
  uint64_t sample_triples = 1000000;
  size_t cache_blocks = 8;
  int64_t max_block_len = int64_t(1) << 22;

  int64_t k() const;   // ceil(4/eps)
  uint64_t q() const;  // per-bank alphabet: the eps/2 constructor's sigma
  void validate() const;
};

struct BlockLocator {
  int64_t t = 0;       // 1-based block index
  int64_t offset = 0;  // 1-based offset within the block
  int64_t start = 0;   // absolute position of the block's first symbol
  int64_t length = 0;  // k^t
};

/* Pure arithmetic: the unique block with l_{t-1} < pos <= l_t. */
BlockLocator locate(int64_t pos, const StreamConfig& cfg);

struct BlockInfo {
  int64_t t = 0;
  int64_t length = 0;
  std::string source;         // "lll" or "lll-sampled"
  bool fully_verified = true; // sampled gates leave this false
  int64_t resamplings = 0;
};

/* Random access into the stream with an LRU cache of materialized blocks.
 * Results are pure: symbol_at(pos) is bit-identical across calls, caching,
 * and whole-prefix materialization. Safe for concurrent calls. */
class Stream {
 public:
  explicit Stream(StreamConfig cfg);

  Symbol symbol_at(int64_t pos);
  SyncString window(int64_t pos, int64_t len);
  SyncString prefix(int64_t n);

  const StreamConfig& config() const { return cfg_; }
  /* Build metadata of every block materialized so far (evicted ones kept). */
  std::vector<BlockInfo> built_blocks() const;

 private:
  const SyncString& block_locked(int64_t t);  // call with mutex_ held

  StreamConfig cfg_;
  mutable std::mutex mutex_;
  std::unordered_map<int64_t, SyncString> cache_;
  std::list<int64_t> recency_;  // front = most recent
  std::map<int64_t, BlockInfo> info_;
};

}  // namespace syncstr
