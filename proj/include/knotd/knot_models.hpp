#pragma once

// Bridges knot expressions to the CFK models and V/H profiles, and carries
// the symbolic tau rules.

#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>

#include "knotd/cfk.hpp"
#include "knotd/knot_expr.hpp"
#include "knotd/profile_cache.hpp"

namespace knotd {

/// Ozsvath-Szabo tau from the expression: (p-1)(q-1)/2 on T(p,q), additive
/// under #, negated by mirror, blind to reversal; wh+(J) has tau 1 when
/// tau(J) > 0 and 0 otherwise.
inline std::int64_t tau_symbolic(const KnotExpr& e) {
  using Kind = KnotExpr::Kind;
  switch (e.kind()) {
    case Kind::Unknot:
      return 0;
    case Kind::Torus:
      return (e.torus_p() - 1) * (e.torus_q() - 1) / 2;
    case Kind::Mirror:
      return -tau_symbolic(e.child());
    case Kind::Reverse:
      return tau_symbolic(e.child());
    case Kind::Whitehead:
      return tau_symbolic(e.child()) > 0 ? 1 : 0;
    case Kind::Sum: {
      std::int64_t total = 0;
      for (const auto& c : e.children()) total += tau_symbolic(c);
      return total;
    }
    case Kind::Cable:
      throw Unavailable("tau unavailable: " + e.str() + " is a two-component link");
  }
  throw Unavailable("tau unavailable for " + e.str());
}

/// CFK^infty model: staircases for positive torus knots, duals for mirrors,
/// tensor products for sums. Whitehead doubles and cables have no model.
inline CFKComplex complex_for(const KnotExpr& e) {
  using Kind = KnotExpr::Kind;
  switch (e.kind()) {
    case Kind::Unknot:
      return CFKComplex::unknot();
    case Kind::Torus:
      return staircase_from_alexander(AlexanderPolynomial::torus_knot(e.torus_p(), e.torus_q()));
    case Kind::Mirror:
      return dual(complex_for(e.child()));
    case Kind::Reverse:
      return reverse(complex_for(e.child()));
    case Kind::Sum: {
      CFKComplex acc = complex_for(e.children().front());
      for (std::size_t k = 1; k < e.children().size(); ++k) acc = tensor(acc, complex_for(e.children()[k]));
      return acc;
    }
    case Kind::Whitehead:
      throw Unavailable("profile unavailable: no CFK model for the Whitehead double " + e.str() +
                        " (supply one through the profile cache)");
    case Kind::Cable:
      throw Unavailable("profile unavailable: " + e.str() + " is a link, not a knot");
  }
  throw Unavailable("profile unavailable for " + e.str());
}

struct ResolvedProfile {
  VHProfile profile;
  std::string provenance;  // "computed" or "user"
};

/// Looks up or computes V/H profiles, consulting an optional on-disk cache.
/// Results are memoized per instance; lookups are serialized by a mutex.
class ProfileResolver {
 public:
  struct Options {
    std::optional<std::filesystem::path> cache_path;
    std::optional<std::int64_t> truncation;
    std::ostream* warnings = nullptr;
  };

  ProfileResolver() = default;
  explicit ProfileResolver(Options options) : options_(std::move(options)) {}

  /// Throws Unavailable when no model or cached entry exists.
  ResolvedProfile resolve(const KnotExpr& e) {
    const KnotExpr canon = canonical(e);
    const std::string key = canon.str();
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::optional<ProfileCache> cache;
    if (options_.cache_path) cache.emplace(*options_.cache_path, options_.warnings);
    if (cache) {
      if (auto hit = cache->find(key)) {
        ResolvedProfile r{hit->profile, hit->provenance};
        memo_.emplace(key, r);
        return r;
      }
    }
    const CFKComplex model = complex_for(canon);
    const std::int64_t window = options_.truncation.value_or(default_truncation(model));
    ResolvedProfile r{vh_profile(model, window), "computed"};
    if (cache) cache->store({key, r.profile, kEngineVersion, "computed"});
    memo_.emplace(key, r);
    return r;
  }

  std::optional<ResolvedProfile> try_resolve(const KnotExpr& e) {
    try {
      return resolve(e);
    } catch (const Unavailable&) {
      return std::nullopt;
    }
  }

  /// Registers a profile obtained elsewhere (literature values, user input).
  void supply(const KnotExpr& e, VHProfile profile) {
    std::lock_guard lock(mutex_);
    memo_.insert_or_assign(canonical_key(e), ResolvedProfile{std::move(profile), "user"});
  }

 private:
  Options options_;
  std::mutex mutex_;
  std::map<std::string, ResolvedProfile> memo_;
};

}  // namespace knotd
