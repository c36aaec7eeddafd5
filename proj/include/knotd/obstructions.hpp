#pragma once

// Verdicts on P_l(K) being concordant to a split or locally knotted link,
// and on the Bing double B(K) being slice. Every verdict is one-directional:
// a nonvanishing invariant obstructs, vanishing invariants certify nothing.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotd/correction_terms.hpp"
#include "knotd/knot_models.hpp"
#include "knotd/surgery_calculus.hpp"

namespace knotd {

struct DeltaEntry {
  Rational value;
  std::string provenance;
};

/// Crossing changes that unknot K: `positive` positive and `negative` negative ones.
struct UnknottingData {
  std::int64_t positive = 0;
  std::int64_t negative = 0;
};

struct KnotInvariantRecord {
  KnotExpr knot = KnotExpr::unknot();
  std::optional<std::int64_t> tau;
  std::optional<Integer> s;                 // only ever user supplied
  std::map<std::int64_t, DeltaEntry> delta;  // k -> delta_{2^k}
  std::optional<ResolvedProfile> profile;
  std::optional<ResolvedProfile> mirror_profile;
  std::optional<UnknottingData> unknotting;
};

/// User-side inputs merged into a record.
struct RecordInputs {
  std::optional<Integer> s;
  std::map<std::int64_t, Rational> delta;
  std::optional<UnknottingData> unknotting;
};

namespace detail {
// Strips rev() and counts mirror() wrappers.
inline KnotExpr strip_orientation(const KnotExpr& k, bool& mirrored) {
  KnotExpr e = k;
  mirrored = false;
  while (e.kind() == KnotExpr::Kind::Reverse || e.kind() == KnotExpr::Kind::Mirror) {
    if (e.kind() == KnotExpr::Kind::Mirror) mirrored = !mirrored;
    e = e.child();
  }
  return e;
}

// delta_2 where the double branched cover has a surgery presentation.
inline std::optional<DeltaEntry> computed_delta2(const KnotExpr& k, ProfileResolver& resolver) {
  bool mirrored = false;
  const KnotExpr core = strip_orientation(k, mirrored);
  if (core.kind() == KnotExpr::Kind::Unknot) return DeltaEntry{0, "computed: M_2(U) = S^3"};
  if (core.kind() != KnotExpr::Kind::Whitehead) return std::nullopt;
  const SurgeryDescription cover = branched_double_cover(core);
  try {
    Rational d = d_surgery(cover.knot, cover.slope, SpinCLabel(0, 1), resolver).d;
    // the cover of the mirror is the orientation reversal
    if (mirrored) d = -d;
    return DeltaEntry{d, "computed: M_2 = " + cover.str() + (mirrored ? " reversed" : "")};
  } catch (const Unavailable&) {
    return std::nullopt;
  }
}
}  // namespace detail

/// Gathers every invariant the engine can compute for a knot and merges user inputs.
inline KnotInvariantRecord build_record(const KnotExpr& knot, ProfileResolver& resolver,
                                        const RecordInputs& inputs = {}) {
  if (!knot.is_knot()) throw DomainError("expected a knot K, got the link " + knot.str());
  KnotInvariantRecord rec;
  rec.knot = knot;
  try {
    rec.tau = tau_symbolic(knot);
  } catch (const Unavailable&) {
  }
  rec.s = inputs.s;
  if (auto d2 = detail::computed_delta2(knot, resolver)) rec.delta.emplace(1, *d2);
  for (const auto& [k, value] : inputs.delta) {
    if (k < 1) throw DomainError("delta_{2^k} needs k >= 1");
    auto it = rec.delta.find(k);
    if (it != rec.delta.end()) {
      if (it->second.value != value)
        throw DomainError("supplied delta_" + std::to_string(1 << std::min<std::int64_t>(k, 30)) + " = " +
                          to_string(value) + " contradicts the computed value " + to_string(it->second.value));
      continue;
    }
    rec.delta.emplace(k, DeltaEntry{value, "user"});
  }
  rec.profile = resolver.try_resolve(knot);
  rec.mirror_profile = resolver.try_resolve(KnotExpr::mirror(knot));
  rec.unknotting = inputs.unknotting;
  return rec;
}

struct ObstructionCheck {
  std::string name;
  std::optional<Rational> value;
  bool available = false;
  bool vanishes = true;  // false means this check obstructs
  std::string provenance;
};

enum class Verdict { Obstructed, NoObstructionFound, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed:
      return "Obstructed";
    case Verdict::NoObstructionFound:
      return "NoObstructionFound";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return {};
}

struct ObstructionReport {
  std::string question;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<ObstructionCheck> checks;
  std::vector<std::string> citations;
  std::vector<std::string> notes;

  /// (name, value) of every available nonvanishing check.
  std::vector<std::pair<std::string, Rational>> witnesses() const {
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& c : checks)
      if (c.available && !c.vanishes && c.value) out.emplace_back(c.name, *c.value);
    return out;
  }

  const ObstructionCheck* check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {
inline ObstructionCheck value_check(std::string name, const std::optional<Rational>& value, std::string provenance) {
  ObstructionCheck c{std::move(name), value, value.has_value(), true, std::move(provenance)};
  if (value) c.vanishes = *value == 0;
  return c;
}

inline void settle(ObstructionReport& r) {
  bool any_available = false;
  bool obstructed = false;
  for (const auto& c : r.checks) {
    any_available = any_available || c.available;
    obstructed = obstructed || (c.available && !c.vanishes);
  }
  r.verdict = obstructed ? Verdict::Obstructed
                         : (any_available ? Verdict::NoObstructionFound : Verdict::Inconclusive);
  if (r.verdict == Verdict::Inconclusive) r.notes.push_back("inconclusive: no invariants computable");
  if (r.verdict == Verdict::NoObstructionFound)
    r.notes.push_back("NoObstructionFound is not a certificate: vanishing invariants do not imply the concordance");
}

inline std::string delta_name(std::int64_t k) {
  return "delta_" + (k < 31 ? std::to_string(std::int64_t{1} << k) : "2^" + std::to_string(k));
}

inline void add_common_checks(ObstructionReport& r, const KnotInvariantRecord& rec, bool include_s,
                              const std::string& s_note) {
  r.checks.push_back(value_check("tau", rec.tau ? std::optional<Rational>(Rational(*rec.tau)) : std::nullopt,
                                 rec.tau ? "computed: symbolic tau" : "unavailable"));
  if (include_s) {
    r.checks.push_back(value_check("s", rec.s ? std::optional<Rational>(Rational(*rec.s)) : std::nullopt,
                                   rec.s ? "user" : "unavailable: s is never computed"));
  } else {
    ObstructionCheck c{"s", rec.s ? std::optional<Rational>(Rational(*rec.s)) : std::nullopt, false, true, s_note};
    r.checks.push_back(std::move(c));
  }
  for (const auto& [k, entry] : rec.delta) r.checks.push_back(value_check(delta_name(k), entry.value, entry.provenance));
}

inline std::optional<Rational> dnorm_at(const std::optional<ResolvedProfile>& profile, const Slope& s) {
  if (!profile) return std::nullopt;
  return surgery_d_from_profile(profile->profile, s, SpinCLabel(0, 1)).dnorm;
}
}  // namespace detail

/// Obstructions to P(K) = P_0(K) being smoothly concordant to a split link:
/// tau, s, delta_{2^k} and dnorm(S^3_{+-1}(K)) must all vanish.
inline ObstructionReport split_verdict(const KnotInvariantRecord& rec) {
  ObstructionReport r;
  r.question = "is P(" + rec.knot.str() + ") smoothly concordant to a split link?";
  detail::add_common_checks(r, rec, true, {});
  const Slope plus_one = Slope::integer(1);
  const Slope minus_one = Slope::integer(-1);
  r.checks.push_back(detail::value_check(
      "dnorm(S^3_{+1})", detail::dnorm_at(rec.profile, plus_one),
      rec.profile ? rec.profile->provenance + ": V/H profile of K" : "unavailable: no profile for K"));
  r.checks.push_back(detail::value_check(
      "dnorm(S^3_{-1})", detail::dnorm_at(rec.mirror_profile, minus_one),
      rec.mirror_profile ? rec.mirror_profile->provenance + ": V/H profile of mirror(K)"
                         : "unavailable: no profile for mirror(K)"));
  r.citations = {
      "smooth concordance of P(K) to a split link forces tau(K) = s(K) = delta_{2^k}(K) = 0 and "
      "dnorm(S^3_{p/q}(K), i) = 0 for every nonzero p/q and every Spin^c label i",
      "the dnorm condition is equivalent to d(S^3_{+-1}(K)) = 0",
      "dnorm(S^3_1(K)) = 0 forces V_0 = 0 and hence dnorm = 0 for every positive surgery",
  };
  if (const auto* c = r.check("dnorm(S^3_{+1})"); c && c->available && c->vanishes)
    r.notes.push_back("dnorm(S^3_{+1}) = 0, so dnorm vanishes for every positive surgery on K");
  if (const auto* c = r.check("dnorm(S^3_{-1})"); c && c->available && c->vanishes)
    r.notes.push_back("dnorm(S^3_{-1}) = 0, so dnorm vanishes for every negative surgery on K");
  detail::settle(r);
  return r;
}

/// Obstructions to the Bing double B(K) being smoothly slice.
inline ObstructionReport bing_verdict(const KnotInvariantRecord& rec) {
  ObstructionReport r;
  r.question = "is the Bing double B(" + rec.knot.str() + ") smoothly slice?";
  r.citations = {
      "if B(K) is slice then dnorm(S^3_{p/q}(K), i) = 0 for every nonzero p/q and every label i",
      "if B(K) is slice then tau(K) = delta_{2^k}(K) = 0",
      "it is not known whether s(K) must vanish when B(K) is slice; s is reported but never used",
  };
  if (!rec.profile) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back("inconclusive: no V/H profile for " + rec.knot.str());
    return r;
  }
  detail::add_common_checks(r, rec, false, "not used: s is not known to obstruct Bing doubles");
  r.checks.push_back(detail::value_check("dnorm(S^3_{+1})", detail::dnorm_at(rec.profile, Slope::integer(1)),
                                         rec.profile->provenance + ": V/H profile of K"));
  detail::settle(r);
  return r;
}

enum class BoundSide { Lower, Upper };

/// A constant C(n, p, r) with -C <= d(S^3_r(K), s) for r outside [0, 4p] and
/// d(S^3_r(K), s) <= C for r outside [-4n, 0], for every K unknotted by
/// changing p positive and n negative crossings:
///   C = max_i |d(S^3_{r+4n}(U), i)| + max_i |d(S^3_{r-4p}(U), i)| + (n + p).
/// The constant is conservative rather than sharp.
inline Rational d_bound_constant(std::int64_t negative, std::int64_t positive, const Slope& r, BoundSide side) {
  if (negative < 0 || positive < 0) throw DomainError("crossing counts must be nonnegative");
  if (r.is_infinite()) throw DomainError("bound needs a finite slope");
  const Rational rv = r.value();
  if (side == BoundSide::Lower && rv >= 0 && rv <= 4 * positive)
    throw DomainError("bound not asserted here: lower bound needs r outside [0, " + std::to_string(4 * positive) + "]");
  if (side == BoundSide::Upper && rv >= -4 * negative && rv <= 0)
    throw DomainError("bound not asserted here: upper bound needs r outside [" + std::to_string(-4 * negative) +
                      ", 0]");
  const Rational up = rv + 4 * negative;
  const Rational down = rv - 4 * positive;
  if (up == 0 || down == 0) throw DomainError("bound not asserted here: r + 4n and r - 4p must be nonzero");
  auto max_abs = [](const Rational& slope_value) {
    const Slope s = Slope::from_rational(slope_value);
    Rational best = 0;
    for (Integer i = 0; i < s.label_count(); ++i) {
      Rational d = unknot_d(s, SpinCLabel(i, s.label_count()));
      if (d < 0) d = -d;
      best = std::max(best, d);
    }
    return best;
  };
  return max_abs(up) + max_abs(down) + Rational(negative + positive);
}

/// Checks d(S^3_r(K), i) against +-C on every label; sides where the bound
/// is not asserted are skipped.
struct BoundCheck {
  bool lower_applies = false;
  bool upper_applies = false;
  bool lower_holds = true;
  bool upper_holds = true;
  Rational min_d;
  Rational max_d;
  std::optional<Rational> lower_constant;
  std::optional<Rational> upper_constant;
  bool holds() const { return lower_holds && upper_holds; }
};

inline BoundCheck check_d_bound(const std::vector<Rational>& d_values, const UnknottingData& u, const Slope& r) {
  if (d_values.empty()) throw DomainError("no d-values to check");
  BoundCheck out;
  out.min_d = *std::min_element(d_values.begin(), d_values.end());
  out.max_d = *std::max_element(d_values.begin(), d_values.end());
  try {
    out.lower_constant = d_bound_constant(u.negative, u.positive, r, BoundSide::Lower);
    out.lower_applies = true;
    out.lower_holds = out.min_d >= -*out.lower_constant;
  } catch (const DomainError&) {
  }
  try {
    out.upper_constant = d_bound_constant(u.negative, u.positive, r, BoundSide::Upper);
    out.upper_applies = true;
    out.upper_holds = out.max_d <= *out.upper_constant;
  } catch (const DomainError&) {
  }
  return out;
}

/// One row of the linking-number family comparison for K(n) = wh+(T(2,2n+1)).
struct FamilyRow {
  std::int64_t n = 0;
  std::vector<Rational> values;  // d(L(2l,1) # 2 M_2(K(n)), i) = d(S^3_{2l}(U), i) - 4n
  Rational min_value;
  Rational max_value;
  bool certified = false;  // some value lies below the lower bound
};

struct FamilyCheck {
  std::int64_t ell = 0;
  UnknottingData unknotting;  // of K(n) # rev(K(n))
  Rational constant;          // C for r = 2l
  Rational lower_bound;       // -C, bounds every d(M_2(n), s)
  std::vector<FamilyRow> rows;
  std::optional<std::int64_t> threshold;  // least N0 certified for every n in [N0, n_max]
};

/// d(M_2(n)) for M_2(n) = S^3_{2l}(K(n) # K(n)^r) is bounded below by -C
/// independently of n, since K(n) # K(n)^r unknots by two positive crossing
/// changes. A locally knotted P_l(U) would have double branched cover
/// L(2l,1) # 2 M_2(K(n)) with d-values d(S^3_{2l}(U), i) - 4n. A value below
/// -C rules out the concordance.
inline FamilyRow family_row(std::int64_t ell, std::int64_t n, const Rational& lower_bound) {
  const Slope r = Slope::integer(2 * ell);
  FamilyRow row;
  row.n = n;
  for (Integer i = 0; i < r.label_count(); ++i)
    row.values.push_back(unknot_d(r, SpinCLabel(i, r.label_count())) - Rational(4 * n));
  row.min_value = *std::min_element(row.values.begin(), row.values.end());
  row.max_value = *std::max_element(row.values.begin(), row.values.end());
  row.certified = row.min_value < lower_bound;
  return row;
}

inline FamilyCheck linking_family_check(std::int64_t ell, std::int64_t n_max) {
  if (ell >= 0) throw DomainError("family check needs l < 0; reflect the link to handle l > 0");
  if (n_max < 1) throw DomainError("family check needs n_max >= 1");
  FamilyCheck out;
  out.ell = ell;
  out.unknotting = {2, 0};
  out.constant = d_bound_constant(out.unknotting.negative, out.unknotting.positive, Slope::integer(2 * ell),
                                  BoundSide::Lower);
  out.lower_bound = -out.constant;
  for (std::int64_t n = 1; n <= n_max; ++n) out.rows.push_back(family_row(ell, n, out.lower_bound));
  for (auto it = out.rows.rbegin(); it != out.rows.rend() && it->certified; ++it) out.threshold = it->n;
  return out;
}

namespace detail {
// n when k is wh+(T(2, 2n+1)) up to reversal.
inline std::optional<std::int64_t> whitehead_torus_family_index(const KnotExpr& k) {
  bool mirrored = false;
  const KnotExpr core = strip_orientation(k, mirrored);
  if (mirrored || core.kind() != KnotExpr::Kind::Whitehead) return std::nullopt;
  bool inner_mirrored = false;
  const KnotExpr companion = strip_orientation(core.child(), inner_mirrored);
  if (inner_mirrored || companion.kind() != KnotExpr::Kind::Torus) return std::nullopt;
  const auto a = std::min(companion.torus_p(), companion.torus_q());
  const auto b = std::max(companion.torus_p(), companion.torus_q());
  if (a != 2) return std::nullopt;
  return (b - 1) / 2;
}
}  // namespace detail

/// Obstructions to P_l(K) being smoothly concordant to a locally knotted P_l(U).
inline ObstructionReport local_knot_verdict(const KnotInvariantRecord& rec, std::int64_t ell) {
  ObstructionReport r;
  r.question = "is P[" + std::to_string(ell) + "](" + rec.knot.str() +
               ") smoothly concordant to a locally knotted P[" + std::to_string(ell) + "](U)?";
  r.citations = {
      "if P_l(K) is concordant to a locally knotted P_l(U) then K # K^r bounds a genus one surface in B^4, so "
      "2|tau(K)| <= 1 and 2|s(K)| <= 1, forcing tau(K) = s(K) = 0",
  };
  detail::add_common_checks(r, rec, true, {});
  // delta is not an obstruction here
  std::erase_if(r.checks, [](const ObstructionCheck& c) { return c.name.rfind("delta_", 0) == 0; });
  if (ell < 0) {
    if (auto n = detail::whitehead_torus_family_index(rec.knot)) {
      const auto family = linking_family_check(ell, *n);
      const FamilyRow& row = family.rows.back();
      ObstructionCheck c;
      c.name = "d(M_2') - lower bound";
      c.value = row.min_value - family.lower_bound;
      c.available = true;
      c.vanishes = !row.certified;
      c.provenance = "computed: d(S^3_{" + std::to_string(2 * ell) + "}(U), i) - 4n against -C(0,2," +
                     std::to_string(2 * ell) + ") = " + to_string(family.lower_bound);
      r.checks.push_back(std::move(c));
      r.citations.push_back(
          "d(S^3_{2l}(K(n) # K(n)^r)) is bounded below independently of n, while the cover of a locally knotted "
          "P_l(U) has d-values d(L(2l,1), i) - 4n");
    }
  }
  detail::settle(r);
  return r;
}

}  // namespace knotd
