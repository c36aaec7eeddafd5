#pragma once

// Rational surgery slopes, negative continued fractions, and Spin^c label
// arithmetic on S^3_{p/q}(K).

#include <compare>
#include <string>
#include <vector>

#include "knotd/rational.hpp"

namespace knotd {

/// A reduced surgery coefficient p/q. The denominator is nonnegative and the
/// sign lives in the numerator; 1/0 is the only infinite slope.
class Slope {
 public:
  /// Reduces p/q. Any (p, 0) with p != 0 becomes the infinity slope 1/0.
  static Slope reduce(const Integer& p, const Integer& q) {
    if (p == 0 && q == 0) throw DomainError("slope 0/0 is undefined");
    if (q == 0) return Slope(1, 0);
    Integer g = boost::multiprecision::gcd(abs_int(p), abs_int(q));
    Integer num = p / g;
    Integer den = q / g;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Slope(std::move(num), std::move(den));
  }

  static Slope from_rational(const Rational& r) { return Slope(numerator_of(r), denominator_of(r)); }
  static Slope integer(const Integer& n) { return Slope(n, 1); }
  static Slope infinity() { return Slope(1, 0); }

  /// Accepts "p/q", "p" or "inf", with surrounding whitespace.
  static Slope parse(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    const auto last = text.find_last_not_of(" \t");
    const std::string body = first == std::string::npos ? std::string() : text.substr(first, last - first + 1);
    if (body == "inf" || body == "infinity") return infinity();
    const auto slash = body.find('/');
    if (slash == std::string::npos) return from_rational(parse_rational(body));
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (num.find('/') != std::string::npos || den.find('/') != std::string::npos || den.empty() || den[0] == '-' ||
        den[0] == '+')
      throw DomainError("malformed slope '" + text + "'");
    const Rational p = parse_rational(num);
    const Rational q = parse_rational(den);
    return reduce(numerator_of(p), numerator_of(q));
  }

  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }

  bool is_infinite() const noexcept { return q_ == 0; }
  bool is_zero() const noexcept { return p_ == 0; }
  bool is_positive() const noexcept { return !is_infinite() && p_ > 0; }
  bool is_negative() const noexcept { return !is_infinite() && p_ < 0; }

  Rational value() const {
    if (is_infinite()) throw DomainError("infinity slope has no rational value");
    return Rational(p_, q_);
  }

  /// Number of Spin^c structures on S^3_{p/q}(K), i.e. |p|.
  Integer label_count() const { return abs_int(p_); }

  /// "p/q" (always with the denominator) or "inf".
  std::string str() const { return is_infinite() ? std::string("inf") : p_.str() + "/" + q_.str(); }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {}

  Integer p_;
  Integer q_;
};

/// Free-function form of Slope::reduce.
inline Slope reduce(const Integer& p, const Integer& q) { return Slope::reduce(p, q); }

/// Canonical label i in Z_p of a Spin^c structure on S^3_{p/q}(K).
class SpinCLabel {
 public:
  SpinCLabel(Integer value, Integer modulus) : value_(std::move(value)), modulus_(std::move(modulus)) {
    if (modulus_ < 1) throw DomainError("Spin^c label modulus must be at least 1");
    if (value_ < 0 || value_ >= modulus_)
      throw DomainError("Spin^c label " + value_.str() + " out of range [0, " + modulus_.str() + ")");
  }

  /// Reduces an arbitrary integer into Z_p.
  static SpinCLabel wrap(const Integer& value, const Integer& modulus) {
    if (modulus < 1) throw DomainError("Spin^c label modulus must be at least 1");
    return SpinCLabel(mod_floor(value, modulus), modulus);
  }

  const Integer& value() const noexcept { return value_; }
  const Integer& modulus() const noexcept { return modulus_; }

  friend bool operator==(const SpinCLabel&, const SpinCLabel&) = default;

 private:
  Integer value_;
  Integer modulus_;
};

/// Floor of i/q, q >= 1.
inline Integer floor_index(const Integer& i, const Integer& q) {
  if (q <= 0) throw DomainError("floor_index: denominator must be positive");
  return floor_div(i, q);
}

/// Expansion s = a0 - 1/(a1 - 1/(a2 - ...)). Every entry after the first is at least 2.
inline std::vector<Integer> neg_continued_fraction(const Slope& s) {
  if (s.is_infinite()) throw DomainError("continued fraction of the infinity slope is undefined");
  std::vector<Integer> terms;
  Integer num = s.p();
  Integer den = s.q();
  while (true) {
    // ceil(num/den)
    Integer a = -floor_div(-num, den);
    terms.push_back(a);
    Integer rem = a * den - num;  // a - num/den = rem/den, 0 <= rem < den
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return terms;
}

/// Evaluates a0 - 1/(a1 - 1/(...)) exactly.
inline Rational evaluate_neg_continued_fraction(const std::vector<Integer>& terms) {
  if (terms.empty()) throw DomainError("empty continued fraction");
  Rational acc(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (acc == 0) throw DomainError("continued fraction has a zero tail");
    acc = Rational(*it) - 1 / acc;
  }
  return acc;
}

}  // namespace knotd
