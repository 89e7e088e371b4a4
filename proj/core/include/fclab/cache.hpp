#pragma once

#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace fclab {

/// Content-addressed store on disk: one JSON file per (scenario, computation)
/// pair, keyed by a stable hash of the canonical scenario plus the
/// computation id.  Writes go through a temp file and a rename.
class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  static std::string key(const std::string& scenario_canonical, const std::string& comp_id);

  std::optional<nlohmann::json> get(const std::string& scenario_canonical,
                                    const std::string& comp_id) const;
  void put(const std::string& scenario_canonical, const std::string& comp_id,
           const nlohmann::json& payload) const;

  /// Computation ids stored for one scenario.
  std::vector<std::string> entries_for(const std::string& scenario_canonical) const;

  /// Drop entries with a stale version field; returns how many were removed.
  int gc() const;

  struct VerifyResult {
    int checked = 0;
    int matched = 0;
    std::vector<std::string> corrupt;  // computation ids that mismatched
  };

  /// Recompute a deterministic 10% sample (at least one entry) and compare
  /// byte-for-byte.
  VerifyResult verify(const std::string& scenario_canonical,
                      const std::function<nlohmann::json(const std::string&)>& recompute) const;

  static constexpr int kVersion = 1;

 private:
  std::string dir_;
  std::string path_for(const std::string& key) const;
};

}  // namespace fclab
