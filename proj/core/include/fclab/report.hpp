#pragma once

#include <json.hpp>
#include <string>

#include "fclab/cache.hpp"
#include "fclab/scenario.hpp"
#include "fclab/theorems.hpp"

namespace fclab {

struct RunOptions {
  int jobs = 0;           // 0 = use all hardware threads
  std::string cache_dir;  // empty disables the on-disk cache
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 2 at least one failure, 3 inconclusive only
  nlohmann::json report;
  std::string markdown;
};

nlohmann::json check_report_to_json(const CheckReport& rep);

/// Full pipeline for one scenario: sequences, tables, fits, series, limits,
/// then every requested check.  Deterministic given the scenario; cache hits
/// are byte-identical to recomputation.
RunResult run_scenario(const Scenario& scenario, const RunOptions& options = {});

/// Writes report.json and report.md under dir.
void write_reports(const RunResult& result, const std::string& dir);

/// Recompute a single cached computation for cache verification.
nlohmann::json recompute_for_cache(const Scenario& scenario, const std::string& comp_id,
                                   const RunOptions& options);

}  // namespace fclab
