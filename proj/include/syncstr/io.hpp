#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "syncstr/ecc.hpp"
#include "syncstr/sync_string.hpp"

namespace syncstr {

/* String files start with a header line "alphabet=<q>"; '#' starts a comment
 * and blank lines are skipped throughout. The body is either one decimal
 * symbol per line ("lines") or, for q <= 36, a single base-36 digit string
 * ("compact", digits 0-9 then a-z). A parser sees compact exactly when the
 * body is one line and q <= 36, so the writer also uses the compact form for
 * one-symbol strings at q <= 36 (the two forms coincide for symbols < 10). */
enum class StringFormat { lines, compact };

std::string format_string_file(const SyncString& s, StringFormat format);
SyncString parse_string_file(std::string_view text);
void write_string_file(const std::filesystem::path& path, const SyncString& s,
                       StringFormat format);
SyncString read_string_file(const std::filesystem::path& path);

/* Code files: header line "m=<m> q=<q> d=<d> count=<count>" followed by one
 * codeword per line as space-separated decimal symbols. Same comment and
 * blank-line rules. Parsing re-checks shape and symbol ranges. */
std::string format_code_file(const BlockCode& code);
BlockCode parse_code_file(std::string_view text);
void write_code_file(const std::filesystem::path& path, const BlockCode& code);
BlockCode read_code_file(const std::filesystem::path& path);

}  // namespace syncstr
