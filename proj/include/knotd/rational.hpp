#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "knotd/errors.hpp"

namespace knotd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(num, den);
}

/// Floor of a/b for b > 0 (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  if (b <= 0) throw DomainError("floor_div: divisor must be positive");
  Integer q = a / b;  // truncates toward zero
  if (a % b != 0 && a < 0) --q;
  return q;
}

/// Least nonnegative residue of a modulo m, m > 0.
inline Integer mod_floor(const Integer& a, const Integer& m) { return a - floor_div(a, m) * m; }

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// "a/b", or "a" when the value is an integer.
inline std::string to_string(const Rational& r) {
  const Integer den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

inline std::string to_string(const Integer& n) { return n.str(); }

/// Parses "a", "a/b" or "-a/b" with decimal integers.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& part) -> Integer {
    if (part.empty()) throw DomainError("malformed rational '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw DomainError("malformed rational '" + text + "'");
    for (std::size_t k = start; k < part.size(); ++k)
      if (part[k] < '0' || part[k] > '9') throw DomainError("malformed rational '" + text + "'");
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace knotd
