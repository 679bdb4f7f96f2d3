#pragma once

// Loop file format: UTF-8 text, '#' starts a comment, first non-blank
// non-comment line holds the order n, then n lines of n whitespace-separated
// integers in [0, n); row x column y is x·y.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "loopsmith/core.hpp"

namespace loopsmith {

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const size_t h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

inline bool parse_ints(const std::string& text, std::vector<long>& out) {
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    try {
      size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) return false;
      out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

inline LoopTable load_loop(std::istream& in) {
  std::string line;
  int lineno = 0;
  long n = -1;
  std::vector<int> cells;
  int rows_read = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<long> vals;
    if (!detail::parse_ints(detail::strip_comment(line), vals))
      throw LoopError(Err::ParseError,
                      "line " + std::to_string(lineno) + ": not an integer",
                      lineno);
    if (vals.empty()) continue;

    if (n < 0) {
      if (vals.size() != 1 || vals[0] < 1)
        throw LoopError(Err::ParseError,
                        "line " + std::to_string(lineno) +
                            ": expected the order alone on the first line",
                        lineno);
      n = vals[0];
      cells.reserve(static_cast<size_t>(n) * n);
      continue;
    }
    if (rows_read == n)
      throw LoopError(Err::ParseError,
                      "line " + std::to_string(lineno) +
                          ": extra row after the table",
                      lineno);
    if (static_cast<long>(vals.size()) != n)
      throw LoopError(Err::ParseError,
                      "line " + std::to_string(lineno) + ": expected " +
                          std::to_string(n) + " entries, got " +
                          std::to_string(vals.size()),
                      lineno);
    for (long v : vals) cells.push_back(static_cast<int>(v));
    ++rows_read;
  }

  if (n < 0)
    throw LoopError(Err::ParseError, "empty input", lineno);
  if (rows_read != n)
    throw LoopError(Err::ParseError,
                    "expected " + std::to_string(n) + " rows, got " +
                        std::to_string(rows_read),
                    lineno);
  return make_loop(static_cast<int>(n), std::move(cells));
}

inline LoopTable load_loop(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw LoopError(Err::ParseError, "cannot open '" + path + "'");
  return load_loop(f);
}

inline void save_loop(const LoopTable& L, std::ostream& out) {
  const int n = L.order();
  out << n << "\n";
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << L.mul(x, y);
    }
    out << "\n";
  }
}

inline void save_loop(const LoopTable& L, const std::string& path) {
  std::ofstream f(path);
  if (!f)
    throw LoopError(Err::ParseError, "cannot write '" + path + "'");
  save_loop(L, f);
}

inline std::string loop_to_string(const LoopTable& L) {
  std::ostringstream ss;
  save_loop(L, ss);
  return ss.str();
}

}  // namespace loopsmith
