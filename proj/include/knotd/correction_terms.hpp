#pragma once

// Correction terms of rational surgeries: the lens space baseline, the
// max{V, H} formula for positive surgeries, the mirror route for negative
// ones, and recovery of V/H from one large integral surgery.

#include <cstdint>
#include <string>
#include <vector>

#include "knotd/cfk.hpp"
#include "knotd/knot_models.hpp"
#include "knotd/slopes.hpp"

namespace knotd {

/// d(S^3_{p/q}(unknot), i) for p, q > 0 coprime and 0 <= i < p, by the
/// reciprocity recursion
///   d(p, q, i) = -1/4 + (2i + 1 - p - q)^2 / (4pq) - d(q, p mod q, i mod q),
/// terminating at d(1, 0, 0) = d(S^3) = 0.
inline Rational lens_d(Integer p, Integer q, Integer i) {
  if (p <= 0 || q <= 0) throw DomainError("lens_d needs p, q > 0; negative slopes go through the mirror route");
  if (boost::multiprecision::gcd(p, q) != 1) throw DomainError("lens_d needs coprime p and q");
  if (i < 0 || i >= p) throw DomainError("Spin^c label " + i.str() + " out of range for p = " + p.str());
  Rational total = 0;
  int sign = 1;
  while (q != 0) {
    const Integer t = 2 * i + 1 - p - q;
    const Rational step = Rational(-1, 4) + Rational(t * t, 4 * p * q);
    total += sign > 0 ? step : Rational(-step);
    Integer r = p % q;
    i = i % q;
    p = q;
    q = r;
    sign = -sign;
  }
  return total;
}

/// Label map under S^3_{-p/q}(K) = -S^3_{p/q}(mirror K): i -> p - 1 - i (mod p).
inline SpinCLabel mirror_label(const SpinCLabel& i) {
  return SpinCLabel::wrap(i.modulus() - 1 - i.value(), i.modulus());
}

namespace detail {
inline void check_label(const Slope& s, const SpinCLabel& i) {
  if (s.is_infinite()) throw DomainError("surgery slope must be finite");
  if (s.is_zero()) throw DomainError("0-surgery out of scope");
  if (i.modulus() != s.label_count())
    throw DomainError("Spin^c label modulus " + i.modulus().str() + " does not match slope " + s.str());
}
}  // namespace detail

/// d(S^3_s(unknot), i) for any finite nonzero slope.
inline Rational unknot_d(const Slope& s, const SpinCLabel& i) {
  detail::check_label(s, i);
  if (s.is_positive()) return lens_d(s.p(), s.q(), i.value());
  return -lens_d(-s.p(), s.q(), mirror_label(i).value());
}

/// dnorm(S^3_{p/q}(K), i) = -2 max{V_floor(i/q), H_floor((i-p)/q)} for p, q > 0.
inline Rational niwu_dnorm(const VHProfile& profile, const Integer& p, const Integer& q, const SpinCLabel& i) {
  if (p <= 0 || q <= 0) throw DomainError("niwu_dnorm needs p, q > 0");
  if (i.modulus() != p) throw DomainError("Spin^c label modulus must equal p");
  const auto v_index = static_cast<std::int64_t>(floor_index(i.value(), q));
  const auto h_index = static_cast<std::int64_t>(floor_index(i.value() - p, q));
  return Rational(-2 * std::max(profile.v(v_index), profile.h(h_index)));
}

struct SurgeryD {
  Rational d;
  Rational dnorm;
};

/// d and dnorm of S^3_s(K) from a profile. For s > 0 the profile is that of K;
/// for s < 0 it must be the profile of mirror(K).
inline SurgeryD surgery_d_from_profile(const VHProfile& profile, const Slope& s, const SpinCLabel& i) {
  detail::check_label(s, i);
  if (s.is_positive()) {
    const Rational dnorm = niwu_dnorm(profile, s.p(), s.q(), i);
    return {lens_d(s.p(), s.q(), i.value()) + dnorm, dnorm};
  }
  const Integer p = -s.p();
  const SpinCLabel j = mirror_label(i);
  const Rational mirror_dnorm = niwu_dnorm(profile, p, s.q(), j);
  const Rational d = -(lens_d(p, s.q(), j.value()) + mirror_dnorm);
  return {d, d - unknot_d(s, i)};
}

/// d(S^3_s(K), i) with dnorm as a by-product.
inline SurgeryD d_surgery(const KnotExpr& k, const Slope& s, const SpinCLabel& i, ProfileResolver& resolver) {
  detail::check_label(s, i);
  if (!k.is_knot()) throw DomainError("surgery needs a knot; " + k.str() + " is a link");
  const KnotExpr source = s.is_positive() ? k : KnotExpr::mirror(k);
  return surgery_d_from_profile(resolver.resolve(source).profile, s, i);
}

/// All labels of one surgery.
struct DInvariantTable {
  Slope slope = Slope::infinity();
  std::vector<Rational> d;      // indexed by label
  std::vector<Rational> dnorm;  // indexed by label
};

inline DInvariantTable d_table_from_profile(const VHProfile& profile, const Slope& s) {
  detail::check_label(s, SpinCLabel(0, s.label_count()));
  DInvariantTable table{s, {}, {}};
  for (Integer i = 0; i < s.label_count(); ++i) {
    auto value = surgery_d_from_profile(profile, s, SpinCLabel(i, s.label_count()));
    table.d.push_back(std::move(value.d));
    table.dnorm.push_back(std::move(value.dnorm));
  }
  return table;
}

inline DInvariantTable d_table(const KnotExpr& k, const Slope& s, ProfileResolver& resolver) {
  detail::check_label(s, SpinCLabel(0, s.label_count()));
  if (!k.is_knot()) throw DomainError("surgery needs a knot; " + k.str() + " is a link");
  const KnotExpr source = s.is_positive() ? k : KnotExpr::mirror(k);
  return d_table_from_profile(resolver.resolve(source).profile, s);
}

/// Inverts the dnorm values of S^3_n(K), n >= 2g - 1, into the unique
/// profile that reproduces them: for such n at most one of V_i, H_{i-n} is
/// nonzero at each label.
inline VHProfile recover_profile(const std::vector<Rational>& dnorm_values, std::int64_t n, std::int64_t g) {
  if (g < 0) throw DomainError("genus must be nonnegative");
  if (n < 1 || n < 2 * g - 1) throw DomainError("recover_profile needs n >= max(1, 2g - 1)");
  if (static_cast<std::int64_t>(dnorm_values.size()) != n)
    throw DomainError("expected one dnorm value per label of S^3_n(K)");
  std::vector<std::int64_t> halves;
  for (const auto& value : dnorm_values) {
    if (denominator_of(value) != 1 || value > 0 || numerator_of(value) % 2 != 0)
      throw DomainError("not realizable by a profile: dnorm values must be nonpositive even integers");
    halves.push_back(static_cast<std::int64_t>(-numerator_of(value) / 2));
  }
  std::vector<std::int64_t> v(static_cast<std::size_t>(g + 1), 0), h(static_cast<std::size_t>(g + 1), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t m = halves[static_cast<std::size_t>(i)];
    if (i < g) {
      v[static_cast<std::size_t>(i)] = m;
    } else if (i > n - g) {
      h[static_cast<std::size_t>(i - n + g)] = m;  // H_{i-n}
    } else if (m != 0) {
      throw DomainError("not realizable by a profile: label " + std::to_string(i) + " must have dnorm 0");
    }
  }
  h[static_cast<std::size_t>(g)] = v[0];
  VHProfile profile;
  try {
    profile = VHProfile(g, std::move(v), std::move(h));
  } catch (const DomainError& e) {
    throw DomainError(std::string("not realizable by a profile: ") + e.what());
  }
  for (std::int64_t i = 0; i < n; ++i)
    if (niwu_dnorm(profile, n, 1, SpinCLabel(i, n)) != dnorm_values[static_cast<std::size_t>(i)])
      throw DomainError("not realizable by a profile: inconsistent value at label " + std::to_string(i));
  return profile;
}

/// True iff V_0 = 0, in which case every positive surgery has dnorm 0.
inline bool check_vanishing_propagation(const VHProfile& profile) { return profile.v(0) == 0; }

}  // namespace knotd
