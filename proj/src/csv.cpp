#include "cyberquote/csv.hpp"

#include <charconv>
#include <cmath>

#include "cyberquote/error.hpp"

namespace cyberquote::csv {

std::vector<Row> parse(std::string_view text, bool skip_comments) {
  std::vector<Row> rows;
  std::size_t i = 0;
  std::size_t line = 1;
  const std::size_t n = text.size();
  while (i < n) {
    // Row start.
    const std::size_t row_line = line;
    if (text[i] == '\r' || text[i] == '\n') {
      if (text[i] == '\r' && i + 1 < n && text[i + 1] == '\n') ++i;
      ++i;
      ++line;
      continue;
    }
    if (skip_comments && text[i] == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    Row row;
    row.line = row_line;
    std::string field;
    bool in_quotes = false;
    bool done = false;
    while (!done) {
      if (i >= n) {
        if (in_quotes) {
          throw FormatError("line " + std::to_string(row_line) + ": unterminated quoted field");
        }
        row.fields.push_back(std::move(field));
        break;
      }
      const char c = text[i];
      if (in_quotes) {
        if (c == '"') {
          if (i + 1 < n && text[i + 1] == '"') {
            field += '"';
            i += 2;
          } else {
            in_quotes = false;
            ++i;
          }
        } else {
          if (c == '\n') ++line;
          field += c;
          ++i;
        }
        continue;
      }
      switch (c) {
        case '"':
          in_quotes = true;
          ++i;
          break;
        case ',':
          row.fields.push_back(std::move(field));
          field.clear();
          ++i;
          break;
        case '\r':
        case '\n':
          row.fields.push_back(std::move(field));
          if (c == '\r' && i + 1 < n && text[i + 1] == '\n') ++i;
          ++i;
          ++line;
          done = true;
          break;
        default:
          field += c;
          ++i;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(std::string_view field, std::string_view what) {
  const std::string t = trim(field);
  double value = 0.0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || p != t.data() + t.size() || !std::isfinite(value)) {
    throw FormatError("invalid number for " + std::string(what) + ": '" + std::string(field) + "'");
  }
  return value;
}

std::int64_t to_int(std::string_view field, std::string_view what) {
  const std::string t = trim(field);
  std::int64_t value = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || p != t.data() + t.size()) {
    throw FormatError("invalid integer for " + std::string(what) + ": '" + std::string(field) + "'");
  }
  return value;
}

std::uint64_t to_uint64(std::string_view field, std::string_view what) {
  const std::string t = trim(field);
  std::uint64_t value = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || p != t.data() + t.size()) {
    throw FormatError("invalid unsigned integer for " + std::string(what) + ": '" +
                      std::string(field) + "'");
  }
  return value;
}

}  // namespace cyberquote::csv
