#pragma once

// Tokenizing helpers shared by the permutation/word/word-set parsers.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "redweave/error.hpp"

namespace redweave::detail {

inline bool is_separator(char c) { return c == ',' || c == ' ' || c == '\t'; }

/// Splits on commas/whitespace.  A single token made only of digits is
/// returned as-is; callers decide whether compact digit notation applies.
inline std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("invalid " + std::string(what) + " token '" + std::string(token) + "'");
  }
  return value;
}

/// Parses either a separated list of integers or, when `text` is a single
/// token and that token's length is permitted, one integer per digit.
inline std::vector<int> parse_int_list(std::string_view text, std::string_view what,
                                       bool allow_compact) {
  auto tokens = split_tokens(text);
  std::vector<int> out;
  bool has_separator = false;
  for (char c : text) has_separator = has_separator || is_separator(c);
  if (tokens.size() == 1 && !has_separator && allow_compact && tokens[0].size() > 1) {
    for (char c : tokens[0]) {
      if (c < '0' || c > '9') {
        throw InputError("invalid " + std::string(what) + " '" + std::string(text) + "'");
      }
      out.push_back(c - '0');
    }
    return out;
  }
  for (auto t : tokens) out.push_back(parse_int(t, what));
  return out;
}

}  // namespace redweave::detail
