#pragma once

// Internal helpers for the line-oriented text formats.

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "buchi/errors.hpp"

namespace buchi::detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;  // never empty
};

// Splits on whitespace; a double-quoted token keeps its spaces (used for
// guard strings). '#' starts a comment. Blank/comment lines are skipped.
inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == '#')
        break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '"') {
        std::size_t end = raw.find('"', i + 1);
        if (end == std::string::npos)
          throw ParseError("unterminated quoted string", number, i + 1);
        line.tokens.push_back(raw.substr(i + 1, end - i - 1));
        i = end + 1;
      } else {
        std::size_t end = i;
        while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end])) && raw[end] != '#')
          ++end;
        line.tokens.push_back(raw.substr(i, end - i));
        i = end;
      }
    }
    if (!line.tokens.empty())
      lines.push_back(std::move(line));
  }
  return lines;
}

inline std::uint64_t parse_number(const Line& line, std::size_t tok, const char* what) {
  if (tok >= line.tokens.size())
    throw ParseError(std::string("missing ") + what, line.number);
  const std::string& t = line.tokens[tok];
  std::uint64_t value = 0;
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string("expected a number for ") + what + ", got '" + t + "'", line.number);
  for (char c : t) {
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > 0xffffffffull)
      throw ParseError(std::string(what) + " out of range", line.number);
  }
  return value;
}

inline std::uint32_t parse_state(const Line& line, std::size_t tok, std::uint32_t n, const char* what) {
  auto v = parse_number(line, tok, what);
  if (v >= n)
    throw ParseError(std::string(what) + " " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")",
                     line.number);
  return static_cast<std::uint32_t>(v);
}

inline void expect_tokens(const Line& line, std::size_t count) {
  if (line.tokens.size() != count)
    throw ParseError("expected " + std::to_string(count) + " tokens on '" + line.tokens[0] + "' line",
                     line.number);
}

}  // namespace buchi::detail
