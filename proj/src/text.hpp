#pragma once

// Line/token helpers shared by the text formats.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "chartbraid/error.hpp"

namespace chartbraid::detail {

struct Token {
  std::string_view text;
  std::size_t column = 1;  // 1-based
};

struct Line {
  std::size_t number = 0;  // 1-based
  std::string_view text;
  std::vector<Token> tokens;

  const Token& at(std::size_t k) const {
    if (k >= tokens.size()) {
      throw ParseError("missing field " + std::to_string(k + 1), number, text.size() + 1);
    }
    return tokens[k];
  }
  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(what + " ('" + std::string(t.text) + "')", number, t.column);
  }
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, raw, {}};
    std::size_t p = 0;
    while (p < raw.size()) {
      while (p < raw.size() && (raw[p] == ' ' || raw[p] == '\t')) ++p;
      if (p >= raw.size()) break;
      std::size_t q = p;
      while (q < raw.size() && raw[q] != ' ' && raw[q] != '\t') ++q;
      line.tokens.push_back({raw.substr(p, q - p), p + 1});
      p = q;
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

inline bool is_comment(const Line& line) { return !line.tokens.empty() && line.tokens[0].text.front() == '#'; }
inline bool is_blank(const Line& line) { return line.tokens.empty(); }

inline bool parse_int(std::string_view s, int& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

inline bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

inline int require_int(const Line& line, const Token& t, std::string_view s) {
  int v = 0;
  if (!parse_int(s, v)) line.fail(t, "expected an integer");
  return v;
}

/// Value of a `key=value` token; fails when the key differs.
inline std::string_view keyed(const Line& line, const Token& t, std::string_view key) {
  if (t.text.size() <= key.size() || t.text.substr(0, key.size()) != key || t.text[key.size()] != '=') {
    line.fail(t, "expected " + std::string(key) + "=...");
  }
  return t.text.substr(key.size() + 1);
}

inline bool has_key(const Token& t, std::string_view key) {
  return t.text.size() > key.size() && t.text.substr(0, key.size()) == key && t.text[key.size()] == '=';
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

}  // namespace chartbraid::detail
