#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "dspan/errors.hpp"

namespace dspan::detail {

[[noreturn]] inline void parse_fail(int line_no, const std::string& msg) {
  throw InputError("line " + std::to_string(line_no) + ": " + msg);
}

inline bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline bool is_comment(const std::string& line) {
  return line == "c" || line == "c\r" || line.rfind("c ", 0) == 0;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

inline long parse_long(const std::string& token, int line_no) {
  const char* begin = token.c_str();
  char* end = nullptr;
  errno = 0;
  long value = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0' || errno == ERANGE) {
    parse_fail(line_no, "expected an integer, got '" + token + "'");
  }
  return value;
}

/// 1-indexed on disk; returns the 0-based vertex.
inline int parse_vertex(const std::string& token, int n, int line_no) {
  long v = parse_long(token, line_no);
  if (v < 1 || v > n) {
    parse_fail(line_no, "vertex " + token + " out of range [1, " + std::to_string(n) + "]");
  }
  return static_cast<int>(v - 1);
}

} // namespace dspan::detail
