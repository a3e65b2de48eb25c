#pragma once

#include <cstdint>
#include <random>

namespace syncstr {

/* All randomness in the library flows through this: mt19937_64 plus unbiased
 * rejection sampling. The standard fixes the mt19937_64 output sequence, so
 * results are reproducible across platforms for a given seed. Identifier
 * reported in run metadata: "mt19937_64/rejection-v1". */
inline constexpr const char* kRngId = "mt19937_64/rejection-v1";

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  /* Uniform in [0, bound), bound >= 1, via rejection (no modulo bias). */
  uint64_t below(uint64_t bound) {
    if (bound == 0) return 0;
    uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      uint64_t r = gen_();
      if (r >= threshold) return r % bound;
    }
  }

  /* Uniform in [lo, hi] inclusive. */
  uint64_t range(uint64_t lo, uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::mt19937_64 gen_;
};

/* Deterministic seed derivation for sub-streams (per-block, per-retry, ..):
 * splitmix64 finalizer over the concatenated inputs. */
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace syncstr
