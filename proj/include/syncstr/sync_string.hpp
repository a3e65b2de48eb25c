#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "syncstr/fraction.hpp"

namespace syncstr {

using Symbol = uint32_t;

/* A string over the alphabet {0, .., alphabet_size-1}. Symbols are compared
 * by value; alphabet_size is metadata that all operations preserve. */
struct SyncString {
  std::vector<Symbol> symbols;
  uint64_t alphabet_size = 0;

  size_t size() const { return symbols.size(); }
  std::span<const Symbol> view() const { return symbols; }
  /* Throws std::invalid_argument if any symbol is out of range. */
  void check() const;
};

/* Convenience for tests and the CLI: 'a'..'z' / '0'..'9' literals. */
SyncString from_literal(const std::string& text, uint64_t alphabet_size = 0);

/* Monotone matching between two strings; index pairs are 1-based and
 * strictly increasing in both coordinates. */
struct MatchPair {
  int64_t left;
  int64_t right;
};

struct Matching {
  std::vector<MatchPair> pairs;
  size_t size() const { return pairs.size(); }
  /* Throws std::logic_error if monotonicity is broken. */
  void check() const;
};

/* A failed check. `indices` are 1-based; layout depends on kind:
 *   triple kinds use {i, j, k}, interval-pair kinds use {i, j, i2, j2}.
 * `rotation` is the left-rotation count for circle checks, else 0.
 * `achieved` vs `required`: the exact quantities the verdict compared. */
struct Violation {
  std::string kind;
  std::vector<int64_t> indices;
  int64_t rotation = 0;
  Fraction achieved;
  Fraction required;
};

}  // namespace syncstr
