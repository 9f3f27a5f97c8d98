#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cyberquote::csv {

struct Row {
  std::size_t line = 0;  // 1-based source line of the row's first character
  std::vector<std::string> fields;
};

// RFC 4180 style reader: comma separated, double-quoted fields with "" escapes,
// CRLF or LF endings. Blank lines are skipped; lines whose first character is '#'
// are skipped when skip_comments is set.
std::vector<Row> parse(std::string_view text, bool skip_comments = true);

// Quotes a field when it contains a comma, quote, or line break.
std::string escape(std::string_view field);

std::string trim(std::string_view s);

// Strict numeric conversions; the whole (trimmed) field must be consumed.
double to_double(std::string_view field, std::string_view what);
std::int64_t to_int(std::string_view field, std::string_view what);
std::uint64_t to_uint64(std::string_view field, std::string_view what);

}  // namespace cyberquote::csv
