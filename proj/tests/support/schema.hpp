#pragma once

// Validator for the JSON Schema subset used under docs/schemas: type,
// properties, required, additionalProperties, patternProperties, items,
// enum, pattern, minimum and local $ref.

#include <fstream>
#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

namespace schema {

using nlohmann::json;

class Validator {
 public:
  explicit Validator(json root) : root_(std::move(root)) {}

  static Validator from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schema " + path);
    return Validator(json::parse(in));
  }

  /// Empty when valid; otherwise one message per violation.
  std::vector<std::string> validate(const json& doc) const {
    std::vector<std::string> errors;
    check(root_, doc, "$", errors);
    return errors;
  }

 private:
  const json& resolve(const json& s) const {
    if (!s.is_object() || !s.contains("$ref")) return s;
    const std::string ref = s["$ref"];
    if (ref.rfind("#/", 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
    return resolve(root_.at(json::json_pointer(ref.substr(1))));
  }

  static bool has_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    throw std::runtime_error("unknown schema type " + t);
  }

  void check(const json& raw, const json& v, const std::string& at, std::vector<std::string>& errors) const {
    const json& s = resolve(raw);
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, s["type"].get<std::string>());
      }
      if (!ok) {
        errors.push_back(at + ": expected type " + s["type"].dump() + ", got " + v.dump());
        return;
      }
    }
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
      errors.push_back(at + ": " + v.dump() + " not in " + s["enum"].dump());
    if (s.contains("pattern") && v.is_string() &&
        !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
      errors.push_back(at + ": '" + v.get<std::string>() + "' does not match " + s["pattern"].get<std::string>());
    if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
      errors.push_back(at + ": below minimum");
    if (v.is_array() && s.contains("items"))
      for (std::size_t k = 0; k < v.size(); ++k) check(s["items"], v[k], at + "[" + std::to_string(k) + "]", errors);
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& r : s["required"])
          if (!v.contains(r.get<std::string>())) errors.push_back(at + ": missing '" + r.get<std::string>() + "'");
      for (const auto& [key, value] : v.items()) {
        const std::string here = at + "." + key;
        bool matched = false;
        if (s.contains("properties") && s["properties"].contains(key)) {
          check(s["properties"][key], value, here, errors);
          matched = true;
        }
        if (s.contains("patternProperties")) {
          for (const auto& [pattern, sub] : s["patternProperties"].items()) {
            if (std::regex_search(key, std::regex(pattern))) {
              check(sub, value, here, errors);
              matched = true;
            }
          }
        }
        if (!matched && s.contains("additionalProperties")) {
          const json& extra = s["additionalProperties"];
          if (extra.is_boolean()) {
            if (!extra.get<bool>()) errors.push_back(here + ": unexpected property");
          } else {
            check(extra, value, here, errors);
          }
        }
      }
    }
  }

  json root_;
};

}  // namespace schema
