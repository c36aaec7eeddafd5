#pragma once

// Rewrite moves on rational surgery descriptions and the linking-matrix
// certificates behind the crossing-change bound.

#include <optional>
#include <string>
#include <vector>

#include "knotd/knot_expr.hpp"
#include "knotd/slopes.hpp"

namespace knotd {

using IntMatrix = std::vector<std::vector<Integer>>;

/// n - 1/r: an n-framed meridian of an r-framed component collapses into a
/// single component with this coefficient.
inline Slope slam_dunk(const Integer& n, const Slope& r) {
  if (r.is_infinite()) throw DomainError("slam-dunk needs a finite slope");
  if (r.is_zero()) throw DomainError("slam-dunk with r = 0: 1/r is undefined");
  return Slope::from_rational(Rational(n) - 1 / r.value());
}

/// Solves n - 1/r = result for r.
inline Slope slam_dunk_inverse(const Integer& n, const Slope& result) {
  if (result.is_infinite()) throw DomainError("slam-dunk result must be finite");
  const Rational gap = Rational(n) - result.value();
  if (gap == 0) throw DomainError("no finite r gives n - 1/r = n");
  return Slope::from_rational(1 / gap);
}

/// l + p/(q + q'p): p/q surgery on one component of P_l(K) and l + 1/q' on
/// the other equals this single surgery on K.
inline Slope slap_shot(const Integer& ell, const Slope& pq, const Integer& qprime) {
  if (pq.is_infinite()) throw DomainError("slap-shot needs a finite slope p/q");
  const Integer denom = pq.q() + qprime * pq.p();
  if (denom == 0) throw DomainError("slap-shot gives the infinity slope (q + q'p = 0)");
  return Slope::from_rational(Rational(ell) + Rational(pq.p(), denom));
}

/// A linear chain of unknots; the first (head) component is the knot itself.
struct ChainDiagram {
  std::vector<Integer> framings;
  std::optional<Slope> head_slope;
};

/// The integral chain presenting s surgery, with framings from the negative
/// continued fraction of s.
inline ChainDiagram chain_for_slope(const Slope& s) { return {neg_continued_fraction(s), s}; }

/// Symmetric tridiagonal linking matrix: framings on the diagonal, 1 beside it.
inline IntMatrix chain_linking_matrix(const ChainDiagram& c) {
  if (c.framings.empty()) throw DomainError("empty chain");
  const std::size_t n = c.framings.size();
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    m[k][k] = c.framings[k];
    if (k + 1 < n) m[k][k + 1] = m[k + 1][k] = 1;
  }
  return m;
}

namespace detail {
inline void require_square(const IntMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DomainError("matrix must be square");
}

// Leading principal minors D_1..D_n by fraction-free elimination; stops at the
// first vanishing minor, leaving the rest unset.
inline std::vector<Integer> leading_minors(IntMatrix a) {
  require_square(a);
  const std::size_t n = a.size();
  std::vector<Integer> minors;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return minors;
}
}  // namespace detail

/// Exact determinant (Bareiss with row pivoting).
inline Integer determinant(IntMatrix a) {
  detail::require_square(a);
  const std::size_t n = a.size();
  if (n == 0) return 1;  // empty minor
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

/// Determinants of a chain's linking matrix A and of the minor B with the
/// head row and column removed (det of the empty minor is 1).
struct ChainCertificate {
  IntMatrix matrix;
  Integer det_a;
  Integer det_b;
  Integer abs_det_a() const { return abs_int(det_a); }
  Integer abs_det_b() const { return abs_int(det_b); }
  int sign_a() const { return det_a < 0 ? -1 : (det_a > 0 ? 1 : 0); }
  int sign_b() const { return det_b < 0 ? -1 : (det_b > 0 ? 1 : 0); }
};

inline ChainCertificate chain_certificate(const ChainDiagram& c) {
  ChainCertificate cert{chain_linking_matrix(c), 0, 0};
  cert.det_a = determinant(cert.matrix);
  IntMatrix minor;
  for (std::size_t i = 1; i < cert.matrix.size(); ++i)
    minor.emplace_back(cert.matrix[i].begin() + 1, cert.matrix[i].end());
  cert.det_b = determinant(minor);
  return cert;
}

/// Sylvester: leading principal minors alternate in sign starting negative.
inline bool is_negative_definite(const IntMatrix& m) {
  detail::require_square(m);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw DomainError("matrix must be symmetric");
  const auto minors = detail::leading_minors(m);
  if (minors.size() != m.size()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const bool want_negative = k % 2 == 0;
    if (want_negative ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

enum class CrossingSign { Positive = 1, Negative = -1 };

/// Determinant of the intersection form of the cobordism that surgers a
/// (-1)-framed unknot J at one crossing of K, with K presented by its integral
/// chain for r (r > 0), or by the negated chain for -r (r < 0). At a negative
/// crossing J links the head twice: -a - 4b = -b(r + 4) for r > 0 and
/// (-1)^k b(r + 4) for r < 0 with k the chain length. At a positive crossing J
/// is unlinked algebraically and the form is A + (-1).
inline Rational crossing_cobordism_det(const Slope& r, CrossingSign crossing) {
  if (r.is_infinite()) throw DomainError("crossing change needs a finite slope");
  if (r.is_zero()) throw DomainError("0-surgery out of scope");
  ChainDiagram chain;
  if (r.is_positive()) {
    chain = chain_for_slope(r);
  } else {
    chain = chain_for_slope(Slope::reduce(-r.p(), r.q()));
    for (auto& f : chain.framings) f = -f;
    chain.head_slope = r;
  }
  IntMatrix w = chain_linking_matrix(chain);
  const std::size_t n = w.size();
  for (auto& row : w) row.push_back(0);
  w.emplace_back(n + 1, 0);
  w[n][n] = -1;
  if (crossing == CrossingSign::Negative) w[0][n] = w[n][0] = 2;
  return Rational(determinant(std::move(w)));
}

/// Self-intersection -1 - 4/r of the generator of H_2 of the negative-crossing
/// cobordism; negative exactly when r is outside [-4, 0].
inline Rational generator_self_intersection(const Slope& r) {
  if (r.is_infinite()) throw DomainError("generator self-intersection needs a finite slope");
  if (r.is_zero()) throw DomainError("r = 0: -1 - 4/r is undefined");
  return Rational(-1) - Rational(4) / r.value();
}

struct SurgeryDescription {
  KnotExpr knot;
  Slope slope;
  std::string str() const { return "S^3_{" + slope.str() + "}(" + knot.str() + ")"; }
};

/// Double branched covers with a known surgery presentation:
///   P_l(K)    -> S^3_{2l}(K # rev(K))
///   wh+(J)    -> S^3_{1/2}(J # rev(J))   (Akbulut-Kirby picture plus a slam-dunk)
/// Outer rev() wrappers are ignored.
inline SurgeryDescription branched_double_cover(const KnotExpr& k) {
  KnotExpr e = k;
  while (e.kind() == KnotExpr::Kind::Reverse) e = e.child();
  if (e.kind() == KnotExpr::Kind::Cable) {
    if (e.cable_ell() == 0) throw DomainError("0-surgery out of scope: the double branched cover of P_0(K) is S^3_0");
    const KnotExpr& c = e.child();
    return {KnotExpr::sum(c, KnotExpr::reverse(c)), Slope::integer(2 * e.cable_ell())};
  }
  if (e.kind() == KnotExpr::Kind::Whitehead) {
    const KnotExpr& j = e.child();
    return {KnotExpr::sum(j, KnotExpr::reverse(j)), Slope::reduce(1, 2)};
  }
  throw DomainError("no surgery presentation implemented for the double branched cover of " + k.str());
}

}  // namespace knotd
