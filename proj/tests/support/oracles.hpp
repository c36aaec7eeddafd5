#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "knotd/rational.hpp"

namespace oracle {

using knotd::Integer;
using knotd::Rational;

/// d(L(p,1), i) in closed form: ((2i - p)^2 - p) / 4p.
inline Rational lens_q1(std::int64_t p, std::int64_t i) {
  const std::int64_t t = 2 * i - p;
  return Rational(t * t - p, 4 * p);
}

inline std::int64_t brute_floor(std::int64_t i, std::int64_t q) {
  std::int64_t k = 0;
  while (k * q > i) --k;
  while ((k + 1) * q <= i) ++k;
  return k;
}

/// Laplace expansion along the first row.
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

/// a0 - 1/(a1 - 1/(...)), folded from the right.
inline Rational fold_neg_cf(const std::vector<Integer>& a) {
  Rational acc = Rational(a.back());
  for (std::size_t k = a.size() - 1; k-- > 0;) acc = Rational(a[k]) - 1 / acc;
  return acc;
}

/// Gaps of the numerical semigroup <p, q>.
inline std::vector<std::int64_t> semigroup_gaps(std::int64_t p, std::int64_t q) {
  const std::int64_t conductor = (p - 1) * (q - 1);
  std::vector<bool> in(static_cast<std::size_t>(conductor + 1), false);
  for (std::int64_t a = 0; a * p <= conductor; ++a)
    for (std::int64_t b = 0; a * p + b * q <= conductor; ++b) in[static_cast<std::size_t>(a * p + b * q)] = true;
  std::vector<std::int64_t> gaps;
  for (std::int64_t n = 0; n < conductor; ++n)
    if (!in[static_cast<std::size_t>(n)]) gaps.push_back(n);
  return gaps;
}

/// V_k of the torus knot T(p,q) for k >= 0: the number of semigroup gaps at
/// or above g + k.
inline std::int64_t torus_v(std::int64_t p, std::int64_t q, std::int64_t k) {
  const std::int64_t g = (p - 1) * (q - 1) / 2;
  const auto gaps = semigroup_gaps(p, q);
  return std::count_if(gaps.begin(), gaps.end(), [&](std::int64_t n) { return n >= g + k; });
}

/// V_k for every k, given V_0..V_g of a knot with H_k = V_{-k}.
inline std::int64_t extend_v(const std::vector<std::int64_t>& v, std::int64_t k) {
  const auto g = static_cast<std::int64_t>(v.size()) - 1;
  if (k >= g) return 0;
  if (k >= 0) return v[static_cast<std::size_t>(k)];
  return extend_v(v, -k) - k;
}

/// V_k(K1 # K2) = min over a + b = k of V_a(K1) + V_b(K2), valid for sums
/// of L-space knots.
inline std::vector<std::int64_t> sum_profile_v(const std::vector<std::int64_t>& v1,
                                               const std::vector<std::int64_t>& v2) {
  const auto g1 = static_cast<std::int64_t>(v1.size()) - 1;
  const auto g2 = static_cast<std::int64_t>(v2.size()) - 1;
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k <= g1 + g2; ++k) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t a = -g1 - g2 - 1; a <= g1 + g2 + k + 1; ++a)
      best = std::min(best, extend_v(v1, a) + extend_v(v2, k - a));
    out.push_back(best);
  }
  return out;
}

inline std::vector<std::int64_t> torus_profile_v(std::int64_t p, std::int64_t q) {
  const std::int64_t g = (p - 1) * (q - 1) / 2;
  std::vector<std::int64_t> v;
  for (std::int64_t k = 0; k <= g; ++k) v.push_back(torus_v(p, q, k));
  return v;
}

}  // namespace oracle
