// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace layered {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat &q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat &q) { return boost::multiprecision::denominator(q); }

std::string rat_to_string(const Rat &q);

/// Digits-to-integer without base-prefix interpretation (leading zeros are
/// plain zeros here, not an octal marker).
inline Int int_from_digits(const std::string &digits) {
  Int v = 0;
  for (char c : digits)
    v = v * 10 + (c - '0');
  return v;
}

/// Positioned syntax error (1-based line/column).
class parse_error : public std::runtime_error {
public:
  parse_error(int line, int col, const std::string &expected)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": expected " + expected),
        line(line), col(col), expected(expected) {}
  int line;
  int col;
  std::string expected;
};

/// Raised when a formula leaves the implemented decision fragment
/// (pi2-sort constraints with free layer parameters that no ground
/// reduction removes).
class unsupported_error : public std::runtime_error {
public:
  explicit unsupported_error(const std::string &reason)
      : std::runtime_error("unsupported: " + reason) {}
};

/// Raised when a configurable size cap would be exceeded; never a silent
/// truncation.
class cap_error : public std::runtime_error {
public:
  cap_error(const std::string &what_grew, std::size_t limit)
      : std::runtime_error("cap exceeded: " + what_grew + " (limit " +
                           std::to_string(limit) + ")") {}
};

/// Evaluation failure (unbound variable, quantified input, ...).
class eval_error : public std::runtime_error {
public:
  explicit eval_error(const std::string &msg)
      : std::runtime_error("evaluation error: " + msg) {}
};

/// Size limits threaded through normalization and elimination.
struct Caps {
  std::size_t monomials = 16;   // per-term monomial count
  std::size_t dnf_clauses = 100000;
};

/// splitmix64; used to derive independent per-sample RNG streams so that
/// serial and parallel runs see identical data.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

} // namespace layered
