#pragma once

// Persistent V/H profile cache: one JSON object per line,
//   {"key": ..., "provenance": "computed"|"user", "version": N,
//    "profile": {"g": g, "V": [...], "H": [...]}}
// Later lines for the same key replace earlier ones.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "knotd/cfk.hpp"

namespace knotd {

/// Bumped whenever profile extraction changes; older cache entries are ignored.
inline constexpr int kEngineVersion = 1;

inline nlohmann::json profile_to_json(const VHProfile& p) {
  return {{"g", p.genus()}, {"V", p.v_values()}, {"H", p.h_values()}};
}

/// Throws DomainError (via VHProfile) if the invariants fail.
inline VHProfile profile_from_json(const nlohmann::json& j) {
  return VHProfile(j.at("g").get<std::int64_t>(), j.at("V").get<std::vector<std::int64_t>>(),
                   j.at("H").get<std::vector<std::int64_t>>());
}

struct ProfileCacheEntry {
  std::string key;  // canonical knot expression
  VHProfile profile;
  int version = kEngineVersion;
  std::string provenance = "computed";

  nlohmann::json to_json() const {
    return {{"key", key}, {"profile", profile_to_json(profile)}, {"version", version}, {"provenance", provenance}};
  }

  std::string to_line() const { return to_json().dump(); }

  static ProfileCacheEntry from_json(const nlohmann::json& j) {
    ProfileCacheEntry e;
    e.key = j.at("key").get<std::string>();
    e.profile = profile_from_json(j.at("profile"));
    e.version = j.at("version").get<int>();
    e.provenance = j.at("provenance").get<std::string>();
    if (e.provenance != "computed" && e.provenance != "user")
      throw DomainError("unknown provenance '" + e.provenance + "'");
    return e;
  }
};

class ProfileCache {
 public:
  explicit ProfileCache(std::filesystem::path path, std::ostream* warnings = nullptr)
      : path_(std::move(path)), warnings_(warnings) {}

  const std::filesystem::path& path() const noexcept { return path_; }

  /// Reads every valid current-version entry. Corrupted, stale or
  /// invariant-violating lines are skipped with a warning.
  std::map<std::string, ProfileCacheEntry> load(int version = kEngineVersion) const {
    std::map<std::string, ProfileCacheEntry> entries;
    std::ifstream in(path_);
    if (!in) return entries;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (line.empty()) continue;
      try {
        auto entry = ProfileCacheEntry::from_json(nlohmann::json::parse(line));
        if (entry.version != version) {
          warn("line " + std::to_string(number) + ": version " + std::to_string(entry.version) +
               " does not match engine version " + std::to_string(version) + "; ignored");
          continue;
        }
        entries.insert_or_assign(entry.key, std::move(entry));
      } catch (const std::exception& e) {
        warn("line " + std::to_string(number) + ": skipped corrupted entry (" + e.what() + ")");
      }
    }
    return entries;
  }

  std::optional<ProfileCacheEntry> find(const std::string& key, int version = kEngineVersion) const {
    auto entries = load(version);
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }

  /// Replaces the line with the same key, or appends. Unparseable lines are
  /// preserved. Writes through a temporary file and a rename so readers never
  /// see a partial file. Returns false (with a warning) if the path is unwritable.
  bool store(const ProfileCacheEntry& entry) const {
    std::ostringstream out;
    bool replaced = false;
    {
      std::ifstream in(path_);
      std::string line;
      while (in && std::getline(in, line)) {
        if (line.empty()) continue;
        bool same_key = false;
        try {
          auto j = nlohmann::json::parse(line);
          same_key = j.is_object() && j.contains("key") && j["key"] == entry.key;
        } catch (const std::exception&) {
        }
        if (same_key) {
          if (!replaced) out << entry.to_line() << '\n';
          replaced = true;
        } else {
          out << line << '\n';
        }
      }
    }
    if (!replaced) out << entry.to_line() << '\n';

    std::error_code ec;
    const auto tmp = std::filesystem::path(path_.string() + ".tmp");
    {
      std::ofstream file(tmp, std::ios::trunc);
      if (!file) {
        warn("cannot write profile cache " + path_.string() + "; continuing uncached");
        return false;
      }
      file << out.str();
      if (!file.flush()) {
        warn("cannot write profile cache " + path_.string() + "; continuing uncached");
        return false;
      }
    }
    std::filesystem::rename(tmp, path_, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      warn("cannot replace profile cache " + path_.string() + "; continuing uncached");
      return false;
    }
    return true;
  }

 private:
  void warn(const std::string& message) const {
    if (warnings_) *warnings_ << "warning: profile cache: " << message << '\n';
  }

  std::filesystem::path path_;
  std::ostream* warnings_;
};

}  // namespace knotd
