#pragma once

// JSON renderings shared by the CLI and the tests. Rationals are strings
// ("a" or "a/b") so nothing passes through floating point.

#include <string>

#include <json.hpp>

#include "knotd/correction_terms.hpp"
#include "knotd/obstructions.hpp"
#include "knotd/profile_cache.hpp"
#include "knotd/surgery_calculus.hpp"

namespace knotd {

using nlohmann::json;

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

/// {"knot", "slope", "d": {"0": "a/b", ...}, "dnorm": {...}}; `only` restricts to one label.
inline json table_to_json(const std::string& knot, const DInvariantTable& t, std::optional<Integer> only = {}) {
  json d = json::object();
  json dnorm = json::object();
  for (std::size_t i = 0; i < t.d.size(); ++i) {
    if (only && Integer(i) != *only) continue;
    d[std::to_string(i)] = to_string(t.d[i]);
    dnorm[std::to_string(i)] = to_string(t.dnorm[i]);
  }
  return {{"knot", knot}, {"slope", t.slope.str()}, {"d", std::move(d)}, {"dnorm", std::move(dnorm)}};
}

inline json report_to_json(const ObstructionReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"value", c.value ? json(to_string(*c.value)) : json(nullptr)},
                      {"vanishes", c.available ? json(c.vanishes) : json(nullptr)},
                      {"available", c.available},
                      {"provenance", c.provenance}});
  }
  json witnesses = json::array();
  for (const auto& [name, value] : r.witnesses()) witnesses.push_back({{"name", name}, {"value", to_string(value)}});
  return {{"question", r.question}, {"verdict", to_string(r.verdict)}, {"checks", std::move(checks)},
          {"witnesses", std::move(witnesses)}, {"citations", r.citations}, {"notes", r.notes}};
}

inline json family_to_json(const FamilyCheck& f) {
  json rows = json::array();
  for (const auto& row : f.rows) {
    json values = json::array();
    for (const auto& v : row.values) values.push_back(to_string(v));
    rows.push_back({{"n", row.n},
                    {"lower_bound", to_string(f.lower_bound)},
                    {"values", std::move(values)},
                    {"min", to_string(row.min_value)},
                    {"certified", row.certified},
                    {"verdict", row.certified ? "Obstructed" : "NoObstructionFound"}});
  }
  return {{"ell", f.ell},
          {"unknotting", {{"positive", f.unknotting.positive}, {"negative", f.unknotting.negative}}},
          {"constant", to_string(f.constant)},
          {"rows", std::move(rows)},
          {"threshold", f.threshold ? json(*f.threshold) : json(nullptr)}};
}

inline json chain_to_json(const ChainDiagram& c, const ChainCertificate& cert) {
  json framings = json::array();
  for (const auto& f : c.framings) framings.push_back(to_string(f));
  return {{"slope", c.head_slope ? json(c.head_slope->str()) : json(nullptr)},
          {"framings", std::move(framings)},
          {"matrix", matrix_to_json(cert.matrix)},
          {"det_a", to_string(cert.det_a)},
          {"det_b", to_string(cert.det_b)},
          {"negative_definite", is_negative_definite(cert.matrix)}};
}

}  // namespace knotd
