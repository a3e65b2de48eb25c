#include "syncstr/stream.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "syncstr/errors.hpp"
#include "syncstr/rng.hpp"
#include "syncstr/sampler.hpp"

namespace syncstr {

namespace {

SamplerParams block_params(const Fraction& eps) {
  SamplerParams p;
  p.eps = eps / Fraction(2);
  return p;
}

}  // namespace

int64_t StreamConfig::k() const {
  const bigint v = ceil_div(bigint(4) * eps.den(), eps.num());
  return v.convert_to<int64_t>();
}

uint64_t StreamConfig::q() const { return block_params(eps).sigma(); }

void StreamConfig::validate() const {
  if (!(Fraction(0) < eps && eps < Fraction(1)))
    throw param_error("eps must lie in (0, 1), got " + eps.str());
  block_params(eps).validate();
  if (cache_blocks < 1) throw param_error("cache_blocks must be >= 1");
  if (max_block_len < 1) throw param_error("max_block_len must be >= 1");
}

BlockLocator locate(int64_t pos, const StreamConfig& cfg) {
  if (pos < 1) throw param_error("position must be >= 1");
  const unsigned __int128 k = static_cast<unsigned __int128>(cfg.k());
  unsigned __int128 len = k;   // k^t
  unsigned __int128 start = 1; // l_{t-1} + 1
  for (int64_t t = 1;; ++t) {
    const unsigned __int128 end = start + len - 1;  // l_t
    if (static_cast<unsigned __int128>(pos) <= end) {
      if (len > static_cast<unsigned __int128>(
                    std::numeric_limits<int64_t>::max()))
        throw param_error("position lies beyond the addressable range");
      BlockLocator loc;
      loc.t = t;
      loc.offset = pos - int64_t(start) + 1;
      loc.start = int64_t(start);
      loc.length = int64_t(len);
      return loc;
    }
    start = end + 1;
    len *= k;
  }
}

Stream::Stream(StreamConfig cfg) : cfg_(std::move(cfg)) { cfg_.validate(); }

const SyncString& Stream::block_locked(int64_t t) {
  auto it = cache_.find(t);
  if (it != cache_.end()) {
    recency_.remove(t);
    recency_.push_front(t);
    return it->second;
  }

  BlockLocator probe;
  probe.length = 0;
  {
    /* recompute k^t with the materialization guard */
    const int64_t k = cfg_.k();
    int64_t len = 1;
    for (int64_t i = 0; i < t; ++i) {
      if (len > cfg_.max_block_len / k)
        throw param_error("block " + std::to_string(t) +
                          " exceeds the materialization bound " +
                          std::to_string(cfg_.max_block_len));
      len *= k;
    }
    probe.length = len;
  }

  const SamplerParams params = block_params(cfg_.eps);
  const uint64_t block_seed = mix_seed(cfg_.seed, uint64_t(t));
  BlockInfo info;
  info.t = t;
  info.length = probe.length;

  SyncString built;
  if (probe.length <= cfg_.full_verify_threshold) {
    LllResult r = construct_lll(params, probe.length, block_seed);
    info.source = "lll";
    info.fully_verified = r.fully_verified;
    info.resamplings = r.resamplings;
    built = std::move(r.s);
  } else {
    /* A sampled triple costs O(len^2) on average, so holding the triple
     * count fixed would make gate time grow quartically along the stream.
     * Scale the count to keep per-block gate cost level with the first
     * sampled block size; the exact 600-window scan stays in every round. */
    SampleBudget budget;
    budget.triples = cfg_.sample_triples;
    const int64_t anchor = cfg_.full_verify_threshold + 1;
    if (probe.length > 2 * anchor) {
      const uint64_t shrink =
          uint64_t(probe.length / anchor) * uint64_t(probe.length / anchor);
      budget.triples = std::max<uint64_t>(10000, budget.triples / shrink);
    }
    budget.window_len = 600;
    budget.seed = mix_seed(block_seed, 1);
    LllResult r = construct_lll_sampled(params, probe.length, block_seed, budget);
    info.source = "lll-sampled";
    info.fully_verified = r.fully_verified;
    info.resamplings = r.resamplings;
    built = std::move(r.s);
  }

  /* place the block in its parity bank; the stream alphabet is both banks */
  const uint64_t q = params.sigma();
  const Symbol base = (t % 2 == 1) ? 0 : Symbol(q);
  if (base != 0)
    for (Symbol& c : built.symbols) c = Symbol(c + base);
  built.alphabet_size = 2 * q;

  info_[t] = info;
  if (cache_.size() >= cfg_.cache_blocks && !recency_.empty()) {
    cache_.erase(recency_.back());
    recency_.pop_back();
  }
  recency_.push_front(t);
  return cache_.emplace(t, std::move(built)).first->second;
}

Symbol Stream::symbol_at(int64_t pos) {
  const BlockLocator loc = locate(pos, cfg_);
  std::lock_guard<std::mutex> hold(mutex_);
  return block_locked(loc.t).symbols[size_t(loc.offset - 1)];
}

SyncString Stream::window(int64_t pos, int64_t len) {
  if (pos < 1) throw param_error("position must be >= 1");
  if (len < 0) throw param_error("length must be >= 0");
  SyncString out;
  out.alphabet_size = 2 * cfg_.q();
  out.symbols.reserve(size_t(len));
  std::lock_guard<std::mutex> hold(mutex_);
  int64_t at = pos;
  int64_t remaining = len;
  while (remaining > 0) {
    const BlockLocator loc = locate(at, cfg_);
    const SyncString& blk = block_locked(loc.t);
    const int64_t take = std::min(remaining, loc.length - loc.offset + 1);
    out.symbols.insert(out.symbols.end(),
                       blk.symbols.begin() + (loc.offset - 1),
                       blk.symbols.begin() + (loc.offset - 1) + take);
    at += take;
    remaining -= take;
  }
  return out;
}

SyncString Stream::prefix(int64_t n) { return window(1, n); }

std::vector<BlockInfo> Stream::built_blocks() const {
  std::lock_guard<std::mutex> hold(mutex_);
  std::vector<BlockInfo> out;
  out.reserve(info_.size());
  for (const auto& [t, info] : info_) out.push_back(info);
  return out;
}

}  // namespace syncstr
