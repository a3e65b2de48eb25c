#include "syncstr/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "syncstr/errors.hpp"

namespace syncstr {

namespace {

constexpr uint64_t kCompactMax = 36;

char digit_of(Symbol v) {
  return v < 10 ? char('0' + v) : char('a' + (v - 10));
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  if (c >= 'A' && c <= 'Z') return 10 + (c - 'A');
  return -1;
}

/* Strips an inline '#' comment and surrounding whitespace. */
std::string_view clean(std::string_view line) {
  if (const size_t hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t' ||
                           line.front() == '\r'))
    line.remove_prefix(1);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                           line.back() == '\r'))
    line.remove_suffix(1);
  return line;
}

std::vector<std::string_view> body_lines(std::string_view text) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = clean(text.substr(start, end - start));
    if (!line.empty()) out.push_back(line);
    start = end + 1;
  }
  return out;
}

int64_t parse_int(std::string_view token, const char* what) {
  int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw param_error(std::string(what) + ": bad integer '" +
                      std::string(token) + "'");
  return value;
}

/* "key=<value>" -> value, insisting on the key. */
int64_t keyed_int(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key || token.size() <= key.size() ||
      token[key.size()] != '=')
    throw param_error("expected '" + std::string(key) + "=<integer>', got '" +
                      std::string(token) + "'");
  return parse_int(token.substr(key.size() + 1), key.data());
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw param_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void spew(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw param_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw param_error("write failed for '" + path.string() + "'");
}

}  // namespace

std::string format_string_file(const SyncString& s, StringFormat format) {
  s.check();
  if (format == StringFormat::compact && s.alphabet_size > kCompactMax)
    throw param_error("compact form requires alphabet <= 36");
  const bool compact =
      format == StringFormat::compact ||
      (s.symbols.size() == 1 && s.alphabet_size <= kCompactMax);
  std::string out = "alphabet=" + std::to_string(s.alphabet_size) + "\n";
  if (compact) {
    if (!s.symbols.empty()) {
      for (Symbol v : s.symbols) out.push_back(digit_of(v));
      out.push_back('\n');
    }
  } else {
    for (Symbol v : s.symbols) {
      out += std::to_string(v);
      out.push_back('\n');
    }
  }
  return out;
}

SyncString parse_string_file(std::string_view text) {
  const std::vector<std::string_view> lines = body_lines(text);
  if (lines.empty()) throw param_error("missing 'alphabet=<q>' header");
  const int64_t q = keyed_int(lines[0], "alphabet");
  if (q < 1) throw param_error("alphabet size must be >= 1");

  SyncString s;
  s.alphabet_size = uint64_t(q);
  if (lines.size() == 2 && uint64_t(q) <= kCompactMax) {
    for (char c : lines[1]) {
      const int v = digit_value(c);
      if (v < 0)
        throw param_error(std::string("bad base-36 digit '") + c + "'");
      s.symbols.push_back(Symbol(v));
    }
  } else {
    for (size_t i = 1; i < lines.size(); ++i)
      s.symbols.push_back(Symbol(parse_int(lines[i], "symbol")));
  }
  s.check();
  return s;
}

void write_string_file(const std::filesystem::path& path, const SyncString& s,
                       StringFormat format) {
  spew(path, format_string_file(s, format));
}

SyncString read_string_file(const std::filesystem::path& path) {
  return parse_string_file(slurp(path));
}

std::string format_code_file(const BlockCode& code) {
  code.validate();
  std::string out = "m=" + std::to_string(code.m) +
                    " q=" + std::to_string(code.q) +
                    " d=" + std::to_string(code.d) +
                    " count=" + std::to_string(code.codewords.size()) + "\n";
  for (const std::vector<Symbol>& w : code.codewords) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out.push_back(' ');
      out += std::to_string(w[i]);
    }
    out.push_back('\n');
  }
  return out;
}

BlockCode parse_code_file(std::string_view text) {
  const std::vector<std::string_view> lines = body_lines(text);
  if (lines.empty()) throw param_error("missing code header");
  const std::vector<std::string_view> fields = split_fields(lines[0]);
  if (fields.size() != 4)
    throw param_error("code header needs 'm= q= d= count='");

  BlockCode code;
  code.m = keyed_int(fields[0], "m");
  code.q = uint64_t(keyed_int(fields[1], "q"));
  code.d = keyed_int(fields[2], "d");
  const int64_t count = keyed_int(fields[3], "count");
  if (count < 0 || int64_t(lines.size()) - 1 != count)
    throw param_error("codeword count does not match header");

  code.codewords.reserve(size_t(count));
  for (size_t i = 1; i < lines.size(); ++i) {
    std::vector<Symbol> word;
    for (std::string_view tok : split_fields(lines[i]))
      word.push_back(Symbol(parse_int(tok, "codeword symbol")));
    code.codewords.push_back(std::move(word));
  }
  code.validate();
  return code;
}

void write_code_file(const std::filesystem::path& path,
                     const BlockCode& code) {
  spew(path, format_code_file(code));
}

BlockCode read_code_file(const std::filesystem::path& path) {
  return parse_code_file(slurp(path));
}

}  // namespace syncstr
