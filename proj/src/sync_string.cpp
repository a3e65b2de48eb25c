#include "syncstr/sync_string.hpp"

#include <stdexcept>

#include "syncstr/errors.hpp"

namespace syncstr {

void SyncString::check() const {
  if (alphabet_size == 0 && !symbols.empty())
    throw param_error("string has symbols but alphabet_size=0");
  for (size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] >= alphabet_size)
      throw param_error("symbol at position " + std::to_string(i + 1) +
                        " out of alphabet range");
  }
}

SyncString from_literal(const std::string& text, uint64_t alphabet_size) {
  SyncString s;
  s.symbols.reserve(text.size());
  Symbol max_seen = 0;
  for (char c : text) {
    Symbol v;
    if (c >= 'a' && c <= 'z')
      v = Symbol(c - 'a');
    else if (c >= '0' && c <= '9')
      v = Symbol(c - '0');
    else
      throw param_error(std::string("unsupported literal character '") + c + "'");
    s.symbols.push_back(v);
    if (v > max_seen) max_seen = v;
  }
  s.alphabet_size = alphabet_size ? alphabet_size
                                  : (s.symbols.empty() ? 1 : max_seen + 1);
  s.check();
  return s;
}

void Matching::check() const {
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].left < 1 || pairs[i].right < 1)
      throw std::logic_error("matching indices must be 1-based positive");
    if (i > 0 && (pairs[i].left <= pairs[i - 1].left ||
                  pairs[i].right <= pairs[i - 1].right))
      throw std::logic_error("matching not strictly increasing");
  }
}

}  // namespace syncstr
