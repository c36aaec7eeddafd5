#pragma once

// Command dispatch for the knotd tool. Exit codes: 0 success, 1 usage,
// 2 domain error, 3 inconclusive or unavailable.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotd/report_json.hpp"

namespace knotd::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kInconclusive = 3 };

struct Flags {
  std::string knot = "U";
  std::string slope;
  std::optional<std::string> spinc;
  bool all_spinc = false;
  std::int64_t ell = 0;
  bool json = false;
  std::optional<std::int64_t> truncation;
  std::optional<std::string> cache;
  std::optional<std::string> supply_s;
  std::vector<std::string> supply_delta;
  std::optional<std::string> supply_profile;
  std::optional<std::string> unknotting;
  std::string n;
  std::string qprime = "0";
  std::int64_t n_max = 10;
  std::string side = "both";
};

namespace detail {

inline UnknottingData parse_unknotting(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("--unknotting expects P,N (positive,negative crossing changes)");
  try {
    UnknottingData u{std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
    if (u.positive < 0 || u.negative < 0) throw DomainError("crossing counts must be nonnegative");
    return u;
  } catch (const std::logic_error&) {
    throw DomainError("--unknotting expects two integers P,N, got '" + text + "'");
  }
}

inline std::pair<std::int64_t, Rational> parse_delta(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw DomainError("--supply-delta expects K=VALUE, got '" + text + "'");
  std::int64_t k = 0;
  try {
    k = std::stoll(text.substr(0, eq));
  } catch (const std::logic_error&) {
    throw DomainError("--supply-delta expects an integer K in K=VALUE, got '" + text + "'");
  }
  return {k, parse_rational(text.substr(eq + 1))};
}

inline Integer parse_integer(const std::string& text, const std::string& what) {
  const Rational r = parse_rational(text);
  if (denominator_of(r) != 1) throw DomainError(what + " must be an integer, got " + text);
  return numerator_of(r);
}

inline std::vector<SpinCLabel> labels_for(const Slope& s, const Flags& f) {
  if (s.is_infinite()) throw DomainError("surgery slope must be finite");
  if (s.is_zero()) throw DomainError("0-surgery out of scope");
  const Integer m = s.label_count();
  std::vector<SpinCLabel> out;
  if (f.all_spinc) {
    for (Integer i = 0; i < m; ++i) out.emplace_back(i, m);
  } else {
    out.emplace_back(f.spinc ? parse_integer(*f.spinc, "--spinc") : Integer(0), m);
  }
  return out;
}

inline void print_labelled(std::ostream& out, const std::vector<SpinCLabel>& labels,
                           const std::vector<Rational>& values, bool all) {
  if (!all) {
    out << to_string(values.front()) << '\n';
    return;
  }
  for (std::size_t k = 0; k < labels.size(); ++k) out << labels[k].value() << ": " << to_string(values[k]) << '\n';
}

inline void print_report(std::ostream& out, const ObstructionReport& r) {
  out << r.question << '\n' << "verdict: " << to_string(r.verdict) << '\n';
  for (const auto& c : r.checks) {
    out << "  " << c.name << " = " << (c.value ? to_string(*c.value) : std::string("n/a"));
    if (c.available) out << (c.vanishes ? " (vanishes)" : " (obstructs)");
    out << "  [" << c.provenance << "]\n";
  }
  for (const auto& note : r.notes) out << "note: " << note << '\n';
}

class Runner {
 public:
  Runner(const Flags& flags, std::ostream& out, std::ostream& err)
      : flags_(flags), out_(out), err_(err), resolver_(options(flags, err)) {}

  int lens_d() {
    const Slope s = Slope::parse(flags_.slope);
    const auto labels = labels_for(s, flags_);
    DInvariantTable t{s, {}, {}};
    for (const auto& i : labels) {
      t.d.push_back(unknot_d(s, i));
      t.dnorm.push_back(0);
    }
    return emit_table("U", t, labels, false);
  }

  int d(bool dnorm_only) {
    const KnotExpr k = knot();
    const Slope s = Slope::parse(flags_.slope);
    const auto labels = labels_for(s, flags_);
    DInvariantTable t{s, {}, {}};
    for (const auto& i : labels) {
      const SurgeryD v = d_surgery(k, s, i, resolver_);
      t.d.push_back(v.d);
      t.dnorm.push_back(v.dnorm);
    }
    return emit_table(k.str(), t, labels, dnorm_only);
  }

  int vh() {
    const KnotExpr k = knot();
    const ResolvedProfile r = resolver_.resolve(k);
    if (flags_.json) {
      out_ << json{{"knot", k.str()}, {"profile", profile_to_json(r.profile)}, {"provenance", r.provenance}}.dump(2)
           << '\n';
      return kOk;
    }
    out_ << "g = " << r.profile.genus() << "\nV:";
    for (auto v : r.profile.v_values()) out_ << ' ' << v;
    out_ << "\nH:";
    for (auto h : r.profile.h_values()) out_ << ' ' << h;
    out_ << '\n';
    return kOk;
  }

  int slam_dunk() {
    const Integer n = parse_integer(flags_.n, "--n");
    const Slope r = Slope::parse(flags_.slope);
    const Slope result = knotd::slam_dunk(n, r);
    return emit_value({{"n", to_string(n)}, {"r", r.str()}, {"result", result.str()}}, result.str());
  }

  int slap_shot() {
    const Slope pq = Slope::parse(flags_.slope);
    const Integer qprime = parse_integer(flags_.qprime, "--qprime");
    const Slope result = knotd::slap_shot(flags_.ell, pq, qprime);
    return emit_value({{"ell", flags_.ell}, {"slope", pq.str()}, {"qprime", to_string(qprime)}, {"result", result.str()}},
                      result.str());
  }

  int chain() {
    const Slope s = Slope::parse(flags_.slope);
    const ChainDiagram c = chain_for_slope(s);
    const ChainCertificate cert = chain_certificate(c);
    if (flags_.json) {
      out_ << chain_to_json(c, cert).dump(2) << '\n';
      return kOk;
    }
    out_ << "framings:";
    for (const auto& f : c.framings) out_ << ' ' << f;
    out_ << "\ndet A = " << cert.det_a << "\ndet B = " << cert.det_b
         << "\nnegative definite: " << (is_negative_definite(cert.matrix) ? "yes" : "no") << '\n';
    return kOk;
  }

  int bdc() {
    const KnotExpr k = knot();
    const SurgeryDescription cover = branched_double_cover(k);
    json j{{"knot", k.str()}, {"cover", {{"knot", cover.knot.str()}, {"slope", cover.slope.str()}}}};
    std::optional<DInvariantTable> table;
    try {
      table = d_table(cover.knot, cover.slope, resolver_);
      j["d"] = table_to_json(cover.knot.str(), *table)["d"];
    } catch (const Unavailable& e) {
      j["d"] = nullptr;
      j["note"] = e.what();
    }
    if (flags_.json) {
      out_ << j.dump(2) << '\n';
      return kOk;
    }
    out_ << "M_2(" << k.str() << ") = " << cover.str() << '\n';
    if (table) {
      for (std::size_t i = 0; i < table->d.size(); ++i) out_ << "  d(" << i << ") = " << to_string(table->d[i]) << '\n';
    } else {
      out_ << "  d unavailable: " << j["note"].get<std::string>() << '\n';
    }
    return kOk;
  }

  int obstruct(const std::string& which) {
    const KnotExpr k = knot();
    RecordInputs inputs;
    if (flags_.supply_s) inputs.s = parse_integer(*flags_.supply_s, "--supply-s");
    for (const auto& d : flags_.supply_delta) {
      auto [key, value] = parse_delta(d);
      inputs.delta[key] = value;
    }
    if (flags_.unknotting) inputs.unknotting = parse_unknotting(*flags_.unknotting);
    const KnotInvariantRecord rec = build_record(k, resolver_, inputs);
    ObstructionReport report;
    if (which == "split")
      report = split_verdict(rec);
    else if (which == "bing")
      report = bing_verdict(rec);
    else
      report = local_knot_verdict(rec, flags_.ell);
    if (flags_.json)
      out_ << report_to_json(report).dump(2) << '\n';
    else
      print_report(out_, report);
    return report.verdict == Verdict::Inconclusive ? kInconclusive : kOk;
  }

  int bound() {
    if (!flags_.unknotting) throw DomainError("bound needs --unknotting P,N");
    const UnknottingData u = parse_unknotting(*flags_.unknotting);
    const Slope r = Slope::parse(flags_.slope);
    json j{{"slope", r.str()}, {"unknotting", {{"positive", u.positive}, {"negative", u.negative}}}};
    std::vector<std::pair<std::string, BoundSide>> sides;
    if (flags_.side == "lower" || flags_.side == "both") sides.emplace_back("lower", BoundSide::Lower);
    if (flags_.side == "upper" || flags_.side == "both") sides.emplace_back("upper", BoundSide::Upper);
    std::size_t asserted = 0;
    std::string last_error;
    for (const auto& [name, side] : sides) {
      try {
        const Rational c = d_bound_constant(u.negative, u.positive, r, side);
        j[name] = to_string(side == BoundSide::Lower ? Rational(-c) : c);
        ++asserted;
      } catch (const DomainError& e) {
        if (sides.size() == 1) throw;
        j[name] = nullptr;
        last_error = e.what();
      }
    }
    if (asserted == 0) throw DomainError(last_error);
    if (flags_.json) {
      out_ << j.dump(2) << '\n';
      return kOk;
    }
    for (const auto& [name, side] : sides)
      out_ << name << ": " << (j[name].is_null() ? std::string("not asserted") : j[name].get<std::string>()) << '\n';
    return kOk;
  }

  int family_check() {
    const FamilyCheck f = linking_family_check(flags_.ell, flags_.n_max);
    if (flags_.json) {
      out_ << family_to_json(f).dump(2) << '\n';
      return kOk;
    }
    out_ << "l = " << f.ell << ", C = " << to_string(f.constant) << ", lower bound (a) = " << to_string(f.lower_bound)
         << '\n';
    for (const auto& row : f.rows) {
      out_ << "n = " << row.n << "  (b):";
      for (const auto& v : row.values) out_ << ' ' << to_string(v);
      out_ << "  " << (row.certified ? "Obstructed" : "NoObstructionFound") << '\n';
    }
    out_ << "N0 = " << (f.threshold ? std::to_string(*f.threshold) : std::string("none")) << '\n';
    return kOk;
  }

 private:
  static ProfileResolver::Options options(const Flags& f, std::ostream& err) {
    ProfileResolver::Options o;
    if (f.cache) o.cache_path = *f.cache;
    o.truncation = f.truncation;
    o.warnings = &err;
    return o;
  }

  KnotExpr knot() {
    const KnotExpr k = parse_knot_expr(flags_.knot);
    if (flags_.supply_profile) {
      const VHProfile p = profile_from_json(json::parse(*flags_.supply_profile));
      resolver_.supply(k, p);
    }
    return k;
  }

  int emit_table(const std::string& knot, const DInvariantTable& t, const std::vector<SpinCLabel>& labels,
                 bool dnorm_only) {
    if (flags_.json) {
      json j = table_to_json(knot, DInvariantTable{t.slope, {}, {}});
      for (std::size_t k = 0; k < labels.size(); ++k) {
        j["d"][labels[k].value().str()] = to_string(t.d[k]);
        j["dnorm"][labels[k].value().str()] = to_string(t.dnorm[k]);
      }
      out_ << j.dump(2) << '\n';
      return kOk;
    }
    print_labelled(out_, labels, dnorm_only ? t.dnorm : t.d, flags_.all_spinc);
    return kOk;
  }

  int emit_value(const json& j, const std::string& text) {
    if (flags_.json)
      out_ << j.dump(2) << '\n';
    else
      out_ << text << '\n';
    return kOk;
  }

  const Flags& flags_;
  std::ostream& out_;
  std::ostream& err_;
  ProfileResolver resolver_;
};

}  // namespace detail

/// Runs one command line (without the program name).
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heegaard Floer d-invariants of knot surgeries, with split, Bing and cable obstructions", "knotd"};
  app.require_subcommand(1);
  Flags f;

  auto knot = [&](CLI::App* s, bool required = true) {
    auto* o = s->add_option("--knot", f.knot, "knot expression, e.g. \"T(2,3) # mirror(T(2,3))\"");
    if (required) o->required();
  };
  auto slope = [&](CLI::App* s) { s->add_option("--slope", f.slope, "surgery slope p/q")->required(); };
  auto spinc = [&](CLI::App* s) {
    auto* one = s->add_option("--spinc", f.spinc, "Spin^c label i, 0 <= i < |p| (default 0)");
    auto* all = s->add_flag("--all-spinc", f.all_spinc, "every Spin^c label");
    one->excludes(all);
  };
  auto engine = [&](CLI::App* s) {
    s->add_option("--truncation", f.truncation, "U-power window for the homology computation")
        ->check(CLI::PositiveNumber);
    s->add_option("--cache", f.cache, "profile cache file (line-delimited JSON)");
    s->add_option("--supply-profile", f.supply_profile, "V/H profile of --knot as {\"g\":..,\"V\":[..],\"H\":[..]}");
  };
  auto json_flag = [&](CLI::App* s) { s->add_flag("--json", f.json, "JSON output"); };

  auto* lens = app.add_subcommand("lens-d", "d of surgery on the unknot (a lens space)");
  slope(lens), spinc(lens), json_flag(lens);

  auto* dnorm = app.add_subcommand("dnorm", "normalized d-invariant of S^3_{p/q}(K)");
  knot(dnorm), slope(dnorm), spinc(dnorm), engine(dnorm), json_flag(dnorm);

  auto* d = app.add_subcommand("d", "d-invariant of S^3_{p/q}(K)");
  knot(d), slope(d), spinc(d), engine(d), json_flag(d);

  auto* vh = app.add_subcommand("vh", "V/H profile of K");
  knot(vh), engine(vh), json_flag(vh);

  auto* calc = app.add_subcommand("calc", "surgery calculus");
  calc->require_subcommand(1);
  auto* slam = calc->add_subcommand("slam-dunk", "n - 1/r");
  slam->add_option("--n", f.n, "framing of the meridian")->required();
  slope(slam), json_flag(slam);
  auto* slap = calc->add_subcommand("slap-shot", "l + p/(q + q'p)");
  slap->add_option("--ell", f.ell, "linking parameter l")->required();
  slap->add_option("--qprime", f.qprime, "q' in the 1/q' coefficient")->required();
  slope(slap), json_flag(slap);
  auto* chain = calc->add_subcommand("chain", "integral chain, linking matrix and determinants for a slope");
  slope(chain), json_flag(chain);

  auto* bdc = app.add_subcommand("bdc", "surgery description of the double branched cover");
  knot(bdc), engine(bdc), json_flag(bdc);

  auto* obstruct = app.add_subcommand("obstruct", "concordance obstructions");
  obstruct->require_subcommand(1);
  std::vector<CLI::App*> verdicts;
  for (const char* name : {"split", "bing", "local-knot"}) {
    auto* s = obstruct->add_subcommand(name);
    knot(s), engine(s), json_flag(s);
    s->add_option("--supply-s", f.supply_s, "Rasmussen s(K), user supplied");
    s->add_option("--supply-delta", f.supply_delta, "delta_{2^k}(K) as K=VALUE; repeatable");
    s->add_option("--unknotting", f.unknotting, "P,N crossing changes unknotting K");
    verdicts.push_back(s);
  }
  verdicts[0]->description("is P(K) concordant to a split link?");
  verdicts[1]->description("is the Bing double B(K) slice?");
  verdicts[2]->description("is P_l(K) concordant to a locally knotted P_l(U)?");
  verdicts[2]->add_option("--ell", f.ell, "cable parameter l")->required();

  auto* bound = app.add_subcommand("bound", "crossing-change bound on d(S^3_r(K))");
  slope(bound), json_flag(bound);
  bound->add_option("--unknotting", f.unknotting, "P,N crossing changes")->required();
  bound->add_option("--side", f.side, "lower, upper or both")->check(CLI::IsMember({"lower", "upper", "both"}));

  auto* family = app.add_subcommand("family-check", "certify P_l(wh+(T(2,2n+1))) is not locally knotted, l < 0");
  family->add_option("--ell", f.ell, "cable parameter l < 0")->required();
  family->add_option("--n-max", f.n_max, "largest n to tabulate");
  json_flag(family);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    detail::Runner run(f, out, err);
    if (lens->parsed()) return run.lens_d();
    if (dnorm->parsed()) return run.d(true);
    if (d->parsed()) return run.d(false);
    if (vh->parsed()) return run.vh();
    if (slam->parsed()) return run.slam_dunk();
    if (slap->parsed()) return run.slap_shot();
    if (chain->parsed()) return run.chain();
    if (bdc->parsed()) return run.bdc();
    for (auto* s : verdicts)
      if (s->parsed()) return run.obstruct(s->get_name());
    if (bound->parsed()) return run.bound();
    if (family->parsed()) return run.family_check();
  } catch (const Unavailable& e) {
    err << "unavailable: " << e.what() << '\n';
    return kInconclusive;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  err << app.help();
  return kUsage;
}

}  // namespace knotd::cli
