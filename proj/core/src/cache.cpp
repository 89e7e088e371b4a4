#include "fclab/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fclab/errors.hpp"
#include "fclab/gfp.hpp"

namespace fclab {

namespace fs = std::filesystem;

std::string ResultCache::key(const std::string& scenario_canonical, const std::string& comp_id) {
  std::uint64_t h = fnv1a64(scenario_canonical);
  h = fnv1a64(":" + comp_id, h);
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string ResultCache::path_for(const std::string& k) const { return dir_ + "/" + k + ".json"; }

std::optional<nlohmann::json> ResultCache::get(const std::string& scenario_canonical,
                                               const std::string& comp_id) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key(scenario_canonical, comp_id)));
  if (!in) return std::nullopt;
  nlohmann::json entry;
  try {
    in >> entry;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable entries behave like misses
  }
  if (entry.value("version", 0) != kVersion) return std::nullopt;
  if (entry.value("computation", "") != comp_id) return std::nullopt;
  if (!entry.contains("payload")) return std::nullopt;
  return entry["payload"];
}

void ResultCache::put(const std::string& scenario_canonical, const std::string& comp_id,
                      const nlohmann::json& payload) const {
  if (!enabled()) return;
  fs::create_directories(dir_);
  const std::string k = key(scenario_canonical, comp_id);
  nlohmann::json entry;
  entry["version"] = kVersion;
  entry["key"] = k;
  entry["scenario_hash"] = key(scenario_canonical, "");
  entry["computation"] = comp_id;
  entry["payload"] = payload;
  const std::string final_path = path_for(k);
  const std::string tmp_path = final_path + ".tmp";
  {
    std::ofstream out(tmp_path);
    out << entry.dump(2) << "\n";
  }
  fs::rename(tmp_path, final_path);
}

std::vector<std::string> ResultCache::entries_for(const std::string& scenario_canonical) const {
  std::vector<std::string> ids;
  if (!enabled() || !fs::exists(dir_)) return ids;
  const std::string want = key(scenario_canonical, "");
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.path().extension() != ".json") continue;
    std::ifstream in(e.path());
    nlohmann::json entry;
    try {
      in >> entry;
    } catch (const nlohmann::json::exception&) {
      continue;
    }
    if (entry.value("scenario_hash", "") == want) ids.push_back(entry.value("computation", ""));
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

int ResultCache::gc() const {
  if (!enabled() || !fs::exists(dir_)) return 0;
  int removed = 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.path().extension() != ".json") continue;
    std::ifstream in(e.path());
    nlohmann::json entry;
    bool bad = false;
    try {
      in >> entry;
    } catch (const nlohmann::json::exception&) {
      bad = true;
    }
    if (bad || entry.value("version", 0) != kVersion) {
      in.close();
      fs::remove(e.path());
      ++removed;
    }
  }
  return removed;
}

ResultCache::VerifyResult ResultCache::verify(
    const std::string& scenario_canonical,
    const std::function<nlohmann::json(const std::string&)>& recompute) const {
  VerifyResult result;
  std::vector<std::string> ids = entries_for(scenario_canonical);
  if (ids.empty()) return result;
  // Deterministic 10% sample, at least one entry.
  const std::size_t step = std::max<std::size_t>(1, ids.size() / std::max<std::size_t>(1, ids.size() / 10));
  for (std::size_t i = 0; i < ids.size(); i += step) {
    const std::string& id = ids[i];
    auto stored = get(scenario_canonical, id);
    if (!stored) continue;
    ++result.checked;
    nlohmann::json fresh = recompute(id);
    if (fresh.dump() == stored->dump())
      ++result.matched;
    else
      result.corrupt.push_back(id);
  }
  return result;
}

}  // namespace fclab
