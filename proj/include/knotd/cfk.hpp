#pragma once

// Finite models of knot Floer complexes CFK^infty over F_2[U, U^-1].
//
// A generator x is stored at filtration level i = 0, i.e. with bigrading
// (M(x), A(x)). The element U^n x sits at (i, j) = (-n, A(x) - n) in
// Maslov grading M(x) - 2n. A differential term U^m y of dx must satisfy
// m >= 0, A(y) - m <= A(x) and M(y) - 2m = M(x) - 1.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "knotd/errors.hpp"
#include "knotd/gf2.hpp"

namespace knotd {

/// Symmetrized Alexander polynomial a_{-g} t^{-g} + ... + a_g t^g.
class AlexanderPolynomial {
 public:
  /// coefficients[k] is a_{k - g}; the list must have odd length 2g + 1.
  static AlexanderPolynomial from_coefficients(std::vector<std::int64_t> coefficients) {
    if (coefficients.empty() || coefficients.size() % 2 == 0)
      throw DomainError("Alexander polynomial needs an odd number of coefficients");
    // Trim matching zero ends so that a_g != 0.
    while (coefficients.size() > 1 && coefficients.front() == 0 && coefficients.back() == 0) {
      coefficients.erase(coefficients.begin());
      coefficients.pop_back();
    }
    AlexanderPolynomial poly;
    poly.genus_ = static_cast<std::int64_t>(coefficients.size() / 2);
    poly.coefficients_ = std::move(coefficients);
    poly.validate();
    return poly;
  }

  /// Alexander polynomial of the (p, q) torus knot,
  /// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized.
  static AlexanderPolynomial torus_knot(std::int64_t p, std::int64_t q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
      throw DomainError("torus knot parameters must be coprime and at least 2");
    const std::int64_t degree = (p - 1) * (q - 1);
    // numerator (t^{pq} - 1)(t - 1)
    std::vector<std::int64_t> num(static_cast<std::size_t>(p * q + 2), 0);
    num[0] += 1;
    num[1] -= 1;
    num[static_cast<std::size_t>(p * q)] -= 1;
    num[static_cast<std::size_t>(p * q + 1)] += 1;
    auto divide = [](std::vector<std::int64_t> dividend, std::int64_t n) {
      // exact division by (t^n - 1), from the top degree down
      std::vector<std::int64_t> quotient(dividend.size() - static_cast<std::size_t>(n), 0);
      for (std::size_t k = dividend.size() - 1; k + 1 > static_cast<std::size_t>(n); --k) {
        const std::int64_t c = dividend[k];
        if (c == 0) continue;
        quotient[k - static_cast<std::size_t>(n)] = c;
        dividend[k] -= c;
        dividend[k - static_cast<std::size_t>(n)] += c;
      }
      for (auto c : dividend)
        if (c != 0) throw DomainError("inexact cyclotomic division");
      return quotient;
    };
    auto quotient = divide(divide(num, p), q);
    quotient.resize(static_cast<std::size_t>(degree + 1));
    return from_coefficients(std::move(quotient));
  }

  static AlexanderPolynomial one() { return from_coefficients({1}); }

  std::int64_t genus() const noexcept { return genus_; }

  /// a_k, zero outside [-g, g].
  std::int64_t coefficient(std::int64_t k) const {
    if (k < -genus_ || k > genus_) return 0;
    return coefficients_[static_cast<std::size_t>(k + genus_)];
  }

  const std::vector<std::int64_t>& coefficients() const noexcept { return coefficients_; }

  friend bool operator==(const AlexanderPolynomial&, const AlexanderPolynomial&) = default;

 private:
  AlexanderPolynomial() = default;

  void validate() const {
    const auto n = coefficients_.size();
    for (std::size_t k = 0; k < n; ++k)
      if (coefficients_[k] != coefficients_[n - 1 - k])
        throw DomainError("Alexander polynomial must be symmetric");
    if (std::accumulate(coefficients_.begin(), coefficients_.end(), std::int64_t{0}) != 1)
      throw DomainError("Alexander polynomial must evaluate to 1 at t = 1");
  }

  std::int64_t genus_ = 0;
  std::vector<std::int64_t> coefficients_;
};

/// t_k = sum_{j >= 1} j * a_{k + j} for k = 0..g.
inline std::vector<std::int64_t> torsion_coefficients(const AlexanderPolynomial& poly) {
  const std::int64_t g = poly.genus();
  std::vector<std::int64_t> t(static_cast<std::size_t>(g + 1), 0);
  for (std::int64_t k = 0; k <= g; ++k)
    for (std::int64_t j = 1; k + j <= g; ++j) t[static_cast<std::size_t>(k)] += j * poly.coefficient(k + j);
  return t;
}

struct CFKGenerator {
  std::int64_t maslov = 0;
  std::int64_t alexander = 0;
  friend bool operator==(const CFKGenerator&, const CFKGenerator&) = default;
};

/// One summand U^{u_power} * generator[target] of a differential.
struct CFKTerm {
  std::size_t target = 0;
  std::int64_t u_power = 0;
  friend bool operator==(const CFKTerm&, const CFKTerm&) = default;
  friend auto operator<=>(const CFKTerm&, const CFKTerm&) = default;
};

class CFKComplex {
 public:
  CFKComplex() = default;

  /// Builds and validates a complex; differential[k] lists the terms of d(x_k).
  CFKComplex(std::vector<CFKGenerator> generators, std::vector<std::vector<CFKTerm>> differential)
      : generators_(std::move(generators)), differential_(std::move(differential)) {
    if (differential_.size() != generators_.size())
      throw DomainError("differential must list one entry per generator");
    for (auto& terms : differential_) normalize(terms);
    validate();
  }

  static CFKComplex unknot() { return CFKComplex({{0, 0}}, {{}}); }

  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<CFKGenerator>& generators() const noexcept { return generators_; }
  const std::vector<std::vector<CFKTerm>>& differential() const noexcept { return differential_; }

  /// Largest Alexander grading; equals the genus for every model built here.
  std::int64_t genus() const {
    std::int64_t g = 0;
    for (const auto& x : generators_) g = std::max(g, x.alexander);
    return g;
  }

  /// True when d o d = 0 over F_2[U].
  bool squares_to_zero() const {
    for (const auto& terms : differential_) {
      std::vector<CFKTerm> acc;
      for (const auto& t : terms)
        for (const auto& s : differential_[t.target]) acc.push_back({s.target, t.u_power + s.u_power});
      normalize(acc);
      if (!acc.empty()) return false;
    }
    return true;
  }

  /// Graded Euler characteristic sum_x (-1)^{M(x)} t^{A(x)}.
  AlexanderPolynomial euler_characteristic() const {
    const std::int64_t g = genus();
    std::int64_t lo = 0;
    for (const auto& x : generators_) lo = std::min(lo, x.alexander);
    const std::int64_t span = std::max(g, -lo);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(2 * span + 1), 0);
    for (const auto& x : generators_)
      coeffs[static_cast<std::size_t>(x.alexander + span)] += (x.maslov % 2 == 0) ? 1 : -1;
    return AlexanderPolynomial::from_coefficients(std::move(coeffs));
  }

  friend bool operator==(const CFKComplex&, const CFKComplex&) = default;

  /// Sorts terms and cancels equal pairs (characteristic two).
  static void normalize(std::vector<CFKTerm>& terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<CFKTerm> out;
    for (std::size_t k = 0; k < terms.size();) {
      std::size_t run = k;
      while (run < terms.size() && terms[run] == terms[k]) ++run;
      if ((run - k) % 2 == 1) out.push_back(terms[k]);
      k = run;
    }
    terms = std::move(out);
  }

 private:
  void validate() const {
    for (std::size_t x = 0; x < generators_.size(); ++x) {
      for (const auto& t : differential_[x]) {
        if (t.target >= generators_.size()) throw DomainError("differential term targets a missing generator");
        const auto& src = generators_[x];
        const auto& dst = generators_[t.target];
        if (t.u_power < 0) throw DomainError("differential uses a negative U-power");
        if (dst.maslov - 2 * t.u_power != src.maslov - 1)
          throw DomainError("differential must lower the Maslov grading by one");
        if (dst.alexander - t.u_power > src.alexander)
          throw DomainError("differential must respect the Alexander filtration");
      }
    }
    if (!squares_to_zero()) throw DomainError("differential does not square to zero");
  }

  std::vector<CFKGenerator> generators_;
  std::vector<std::vector<CFKTerm>> differential_;
};

/// Staircase complex of an L-space knot. The polynomial must have the form
/// sum_k (-1)^k t^{n_k} with n_0 > n_1 > ... (nonzero coefficients are +-1,
/// alternate in sign, and start with +1 at the top degree).
inline CFKComplex staircase_from_alexander(const AlexanderPolynomial& poly) {
  std::vector<std::int64_t> exponents;  // n_0 > n_1 > ...
  std::int64_t expected = 1;
  for (std::int64_t k = poly.genus(); k >= -poly.genus(); --k) {
    const std::int64_t a = poly.coefficient(k);
    if (a == 0) continue;
    if (a != expected)
      throw DomainError("not an L-space knot polynomial: nonzero coefficients must be +-1 and alternate in sign starting "
                        "with +1 (violated at t^" + std::to_string(k) + ")");
    exponents.push_back(k);
    expected = -expected;
  }
  const std::size_t n = exponents.size();
  std::vector<CFKGenerator> gens(n);
  std::vector<std::vector<CFKTerm>> diff(n);
  gens[0] = {0, exponents[0]};
  for (std::size_t k = 1; k < n; ++k) {
    gens[k].alexander = exponents[k];
    if (k % 2 == 1) {
      // horizontal arrow to the previous corner: d x_k contains U^{step} x_{k-1}
      const std::int64_t step = exponents[k - 1] - exponents[k];
      gens[k].maslov = gens[k - 1].maslov - 2 * step + 1;
      diff[k].push_back({k - 1, step});
    } else {
      // vertical arrow from x_{k-1} down to this corner
      gens[k].maslov = gens[k - 1].maslov - 1;
      diff[k - 1].push_back({k, 0});
    }
  }
  return CFKComplex(std::move(gens), std::move(diff));
}

/// Tensor product over F_2[U, U^-1]; models connected sum.
inline CFKComplex tensor(const CFKComplex& lhs, const CFKComplex& rhs) {
  const std::size_t n1 = lhs.size();
  const std::size_t n2 = rhs.size();
  std::vector<CFKGenerator> gens;
  gens.reserve(n1 * n2);
  std::vector<std::vector<CFKTerm>> diff(n1 * n2);
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      const auto& x = lhs.generators()[a];
      const auto& y = rhs.generators()[b];
      gens.push_back({x.maslov + y.maslov, x.alexander + y.alexander});
      auto& terms = diff[a * n2 + b];
      for (const auto& t : lhs.differential()[a]) terms.push_back({t.target * n2 + b, t.u_power});
      for (const auto& t : rhs.differential()[b]) terms.push_back({a * n2 + t.target, t.u_power});
    }
  }
  return CFKComplex(std::move(gens), std::move(diff));
}

/// Dual complex (arrows reversed, bigradings negated); models the mirror image.
inline CFKComplex dual(const CFKComplex& c) {
  std::vector<CFKGenerator> gens;
  gens.reserve(c.size());
  for (const auto& x : c.generators()) gens.push_back({-x.maslov, -x.alexander});
  std::vector<std::vector<CFKTerm>> diff(c.size());
  for (std::size_t x = 0; x < c.size(); ++x)
    for (const auto& t : c.differential()[x]) diff[t.target].push_back({x, t.u_power});
  return CFKComplex(std::move(gens), std::move(diff));
}

/// Orientation reversal. The models here are reversal invariant.
inline CFKComplex reverse(const CFKComplex& c) { return c; }

/// The integers V_0..V_g and H_{-g}..H_0 governing surgery d-invariants.
class VHProfile {
 public:
  VHProfile() : VHProfile(0, {0}, {0}) {}

  /// v[k] = V_k for k = 0..g; h[k] = H_{k - g} for k = 0..g.
  VHProfile(std::int64_t genus, std::vector<std::int64_t> v, std::vector<std::int64_t> h)
      : genus_(genus), v_(std::move(v)), h_(std::move(h)) {
    validate();
  }

  std::int64_t genus() const noexcept { return genus_; }
  const std::vector<std::int64_t>& v_values() const noexcept { return v_; }
  const std::vector<std::int64_t>& h_values() const noexcept { return h_; }

  /// V_k for every integer k. Beyond the stored range V_k = 0 (k >= g);
  /// for k < 0 the identity V_k = H_k - k is used.
  std::int64_t v(std::int64_t k) const {
    if (k >= genus_) return 0;
    if (k >= 0) return v_[static_cast<std::size_t>(k)];
    return h(k) - k;
  }

  /// H_k for every integer k: H_k = 0 for k <= -g and H_k = V_k + k for k > 0.
  std::int64_t h(std::int64_t k) const {
    if (k <= -genus_) return 0;
    if (k <= 0) return h_[static_cast<std::size_t>(k + genus_)];
    return v(k) + k;
  }

  friend bool operator==(const VHProfile&, const VHProfile&) = default;

 private:
  void validate() const {
    if (genus_ < 0) throw DomainError("profile genus must be nonnegative");
    const auto n = static_cast<std::size_t>(genus_ + 1);
    if (v_.size() != n || h_.size() != n) throw DomainError("profile must list V_0..V_g and H_-g..H_0");
    for (std::size_t k = 0; k < n; ++k)
      if (v_[k] < 0 || h_[k] < 0) throw DomainError("profile entries must be nonnegative");
    for (std::size_t k = 1; k < n; ++k) {
      if (v_[k] > v_[k - 1]) throw DomainError("V_k must be non-increasing in k");
      if (h_[k] < h_[k - 1]) throw DomainError("H_k must be non-decreasing in k");
    }
    if (v_.back() != 0) throw DomainError("V_g must vanish");
    if (h_.front() != 0) throw DomainError("H_-g must vanish");
    if (v_.front() != h_.back()) throw DomainError("V_0 must equal H_0");
  }

  std::int64_t genus_;
  std::vector<std::int64_t> v_;
  std::vector<std::int64_t> h_;
};

namespace detail {

// Which quotient-free subcomplex of CFK^infty a tower search runs in.
enum class Region { IAndJ, INonpositive, JOnly };

// Smallest U-exponent of x allowed in the region for parameter s.
inline std::int64_t min_exponent(Region region, const CFKGenerator& x, std::int64_t s) {
  switch (region) {
    case Region::IAndJ:
      return std::max<std::int64_t>(0, x.alexander - s);  // i <= 0, j <= s
    case Region::INonpositive:
      return 0;  // i <= 0
    case Region::JOnly:
      return x.alexander - s;  // j <= s
  }
  return 0;
}

inline std::int64_t floor_half(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

// Highest grading of a cycle in the region that survives in H_*(CFK^infty).
// Grading g of CFK^infty is spanned by U^{(M(x)-g)/2} x over generators with
// M(x) = g mod 2; only exponents |n| <= window are admitted.
inline std::int64_t tower_top(const CFKComplex& c, Region region, std::int64_t s, std::int64_t window) {
  const auto& gens = c.generators();
  const std::size_t n = gens.size();
  std::vector<std::int64_t> cap(n);
  for (std::size_t x = 0; x < n; ++x) cap[x] = gens[x].maslov - 2 * min_exponent(region, gens[x], s);
  const std::int64_t top = *std::max_element(cap.begin(), cap.end());
  const std::int64_t bottom = *std::min_element(cap.begin(), cap.end()) - 2;

  auto parity = [](std::int64_t v) { return ((v % 2) + 2) % 2; };
  std::vector<std::size_t> even, odd;  // generators by Maslov parity
  std::vector<std::size_t> position(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto& bucket = parity(gens[x].maslov) == 0 ? even : odd;
    position[x] = bucket.size();
    bucket.push_back(x);
  }

  for (std::int64_t g = top; g >= bottom; --g) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::int64_t shift = parity(gens[x].maslov) == parity(g) ? 0 : 1;
      const std::int64_t e_hi = floor_half(gens[x].maslov - g + shift);
      const std::int64_t e_lo = floor_half(gens[x].maslov - g - shift);
      if (std::max(std::abs(e_hi), std::abs(e_lo)) > window)
        throw TruncationError("tower search left the U-power window |n| <= " + std::to_string(window) +
                              "; increase the truncation");
    }
    const auto& here = parity(g) == 0 ? even : odd;
    const auto& other = parity(g) == 0 ? odd : even;

    // image of d from grading g+1 inside grading g
    gf2::EchelonBasis image(here.size());
    for (auto y : other) {
      gf2::BitVector v(here.size());
      for (const auto& t : c.differential()[y]) v.flip(position[t.target]);
      image.insert(std::move(v));
    }
    // cycles supported in the region at grading g
    std::vector<std::size_t> support;
    std::vector<gf2::BitVector> columns;
    for (auto x : here) {
      if (cap[x] < g) continue;
      support.push_back(x);
      gf2::BitVector v(other.size());
      for (const auto& t : c.differential()[x]) v.flip(position[t.target]);
      columns.push_back(std::move(v));
    }
    for (const auto& combo : gf2::kernel(columns, other.size())) {
      gf2::BitVector cycle(here.size());
      for (std::size_t k = 0; k < support.size(); ++k)
        if (combo.get(k)) cycle.flip(position[support[k]]);
      if (!image.contains(cycle)) {
        if (parity(g) != 0) throw DomainError("complex has homology in odd grading; not a knot complex in S^3");
        return g;
      }
    }
  }
  throw DomainError("complex has no homology tower; not a knot complex in S^3");
}

}  // namespace detail

/// Default U-power window: twice the genus plus the largest torsion
/// coefficient of the Euler characteristic, plus two.
inline std::int64_t default_truncation(const CFKComplex& c) {
  std::int64_t t_max = 0;
  for (auto t : torsion_coefficients(c.euler_characteristic())) t_max = std::max(t_max, std::abs(t));
  return 2 * c.genus() + t_max + 2;
}

/// Extracts V_k and H_k by locating the homology towers of the subcomplexes
/// A_k = C{i <= 0, j <= k}, B = C{i <= 0} and C{j <= k} over F_2. Each tower
/// map acts as U^{(top of target - top of source) / 2}.
inline VHProfile vh_profile(const CFKComplex& c, std::int64_t truncation) {
  if (truncation < 0) throw DomainError("truncation must be nonnegative");
  const std::int64_t g = c.genus();
  auto compute = [&](std::int64_t window) {
    using detail::Region;
    const std::int64_t b_top = detail::tower_top(c, Region::INonpositive, 0, window);
    std::vector<std::int64_t> v(static_cast<std::size_t>(g + 1)), h(static_cast<std::size_t>(g + 1));
    auto tower_gap = [&](std::int64_t target_top, std::int64_t source_top) {
      const std::int64_t diff = target_top - source_top;
      if (diff < 0 || diff % 2 != 0) throw DomainError("inconsistent tower gradings");
      return diff / 2;
    };
    for (std::int64_t k = 0; k <= g; ++k)
      v[static_cast<std::size_t>(k)] = tower_gap(b_top, detail::tower_top(c, Region::IAndJ, k, window));
    for (std::int64_t k = -g; k <= 0; ++k) {
      const std::int64_t a_top = detail::tower_top(c, Region::IAndJ, k, window);
      const std::int64_t j_top = detail::tower_top(c, Region::JOnly, k, window);
      h[static_cast<std::size_t>(k + g)] = tower_gap(j_top, a_top);
    }
    return VHProfile(g, std::move(v), std::move(h));
  };
  VHProfile at_n = compute(truncation);
  VHProfile at_next = compute(truncation + 1);
  if (!(at_n == at_next))
    throw TruncationError("profile changed between truncation " + std::to_string(truncation) + " and " +
                          std::to_string(truncation + 1));
  return at_n;
}

inline VHProfile vh_profile(const CFKComplex& c) { return vh_profile(c, default_truncation(c)); }

}  // namespace knotd
