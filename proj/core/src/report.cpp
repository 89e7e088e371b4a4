#include "fclab/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fclab {

namespace {

nlohmann::json big_json(const BigInt& v) {
  // Every shipped quantity fits well inside 64 bits; fall back to a decimal
  // string if one ever does not.
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return nlohmann::json(static_cast<long long>(v));
  return nlohmann::json(v.str());
}

nlohmann::json sequence_to_json(const PreparedSequence& prep, const RingSpec& ring) {
  nlohmann::json j;
  j["k1"] = prep.seq.k1;
  j["k2"] = prep.seq.k2;
  j["seed"] = prep.seq.seed;
  j["attempts"] = prep.attempts;
  nlohmann::json elems = nlohmann::json::array();
  for (const RingElement& x : prep.seq.elements) elems.push_back(x.str(ring.vars));
  j["elements"] = std::move(elems);
  j["superficial_pass"] = prep.superficial.pass;
  j["superficial_stable_from"] = prep.superficial.stable_from;
  j["regular_certified"] = prep.regular.certified;
  j["extended_colength"] = prep.regular.extended_colength;
  nlohmann::json log = nlohmann::json::array();
  for (const std::string& line : prep.log) log.push_back(line);
  j["log"] = std::move(log);
  return j;
}

}  // namespace

nlohmann::json check_report_to_json(const CheckReport& rep) {
  nlohmann::json j;
  j["id"] = rep.id;
  j["instance"] = rep.instance;
  j["verdict"] = verdict_name(rep.verdict);
  nlohmann::json points = nlohmann::json::array();
  for (const CheckPoint& p : rep.points) {
    points.push_back({{"label", p.label},
                      {"lhs", p.lhs},
                      {"rhs", p.rhs},
                      {"ok", p.ok},
                      {"heuristic", p.heuristic}});
  }
  j["points"] = std::move(points);
  j["notes"] = rep.notes;
  return j;
}

RunResult run_scenario(const Scenario& scenario, const RunOptions& options) {
  RunResult result;
  ResultCache cache(options.cache_dir);
  const std::string canonical = scenario.canonical();

  Workspace W(scenario.ring, scenario.I1, scenario.I2, scenario.k1, scenario.k2,
              scenario.ring.seed, scenario.window, scenario.fiber_nmax, options.jobs);

  nlohmann::json report;
  report["version"] = 1;
  report["scenario"] = scenario.to_json();

  // Sequence preparation (the main split plus the fiber splits when they
  // differ and the dimension allows them).
  nlohmann::json sequences;
  sequences["main"] = sequence_to_json(W.main_sequence(), W.spec());
  if (W.spec().dimension >= 2) {
    sequences["fiber"] = sequence_to_json(W.fiber_sequence(), W.spec());
    sequences["fiber_second"] = sequence_to_json(W.fiber_sequence_second(), W.spec());
  }
  report["sequences"] = std::move(sequences);

  // Hilbert data.
  {
    nlohmann::json hil;
    auto cached = cache.get(canonical, "hilbert_table");
    if (cached) {
      hil["table"] = *cached;
    } else {
      nlohmann::json table = nlohmann::json::array();
      for (int n1 = 0; n1 <= W.window().n1max; ++n1) {
        nlohmann::json row = nlohmann::json::array();
        for (int n2 = 0; n2 <= W.window().n2max; ++n2) row.push_back(W.table().at(n1, n2));
        table.push_back(std::move(row));
      }
      cache.put(canonical, "hilbert_table", table);
      hil["table"] = std::move(table);
    }
    try {
      const BivariateFit& fit = W.bivariate_fit();
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& [idx, e] : fit.poly.coeff)
        coeffs.push_back({{"i1", idx.first}, {"i2", idx.second}, {"e", big_json(e)}});
      hil["polynomial"] = {{"total_degree", fit.poly.total_degree},
                           {"fit_from", fit.fit_from},
                           {"validated", fit.validated},
                           {"coefficients", std::move(coeffs)}};
      const MixedMultiplicities& mm = W.mixed();
      nlohmann::json e_poly = nlohmann::json::array();
      for (const BigInt& e : mm.from_polynomial) e_poly.push_back(big_json(e));
      hil["mixed_multiplicities"] = {{"from_polynomial", std::move(e_poly)},
                                     {"from_parameter_sequences", mm.from_sops},
                                     {"match", mm.match}};
    } catch (const FitUnstable& ex) {
      hil["polynomial_error"] = ex.what();
    }
    report["hilbert"] = std::move(hil);
  }

  // Fiber data.
  {
    nlohmann::json fib;
    try {
      const FiberSeries& F = W.fiber();
      fib["values"] = F.values;
      nlohmann::json fs = nlohmann::json::array();
      for (const BigInt& f : F.f) fs.push_back(big_json(f));
      fib["coefficients"] = std::move(fs);
      fib["fit_from"] = F.fit_from;
      fib["validated"] = F.validated;
    } catch (const FitUnstable& ex) {
      fib["error"] = ex.what();
    }
    if (W.spec().dimension >= 2) {
      for (LimitVariant v : {LimitVariant::FirstIdealElement, LimitVariant::ExtraSecondElement}) {
        const char* name =
            v == LimitVariant::FirstIdealElement ? "limit_first" : "limit_second";
        try {
          const LimitLength& L = W.limit(v);
          nlohmann::json lj;
          lj["per_n"] = L.per_n;
          if (L.stable) {
            lj["stable"] = *L.stable;
            lj["stabilized_from"] = L.stabilized_from;
          }
          fib[name] = std::move(lj);
        } catch (const ScenarioError& ex) {
          fib[name] = {{"error", ex.what()}};
        }
      }
    }
    report["fiber"] = std::move(fib);
  }

  // Checks.
  nlohmann::json checks = nlohmann::json::array();
  int exit_code = 0;
  for (const std::string& id : scenario.checks) {
    nlohmann::json cj;
    auto cached = cache.get(canonical, "check:" + id);
    if (cached) {
      cj = *cached;
    } else {
      CheckReport rep = run_check(id, W);
      cj = check_report_to_json(rep);
      cache.put(canonical, "check:" + id, cj);
    }
    const std::string verdict = cj.value("verdict", "inconclusive");
    if (verdict == "fail")
      exit_code = 2;
    else if (verdict == "inconclusive" && exit_code == 0)
      exit_code = 3;
    checks.push_back(std::move(cj));
  }
  report["checks"] = std::move(checks);

  int pass = 0, heuristic = 0, fail = 0, inconclusive = 0;
  for (const auto& cj : report["checks"]) {
    const std::string v = cj.value("verdict", "");
    if (v == "pass") ++pass;
    else if (v == "heuristic-pass") ++heuristic;
    else if (v == "fail") ++fail;
    else ++inconclusive;
  }
  report["summary"] = {{"pass", pass},
                       {"heuristic_pass", heuristic},
                       {"fail", fail},
                       {"inconclusive", inconclusive},
                       {"exit_code", exit_code}};

  result.exit_code = exit_code;
  result.report = std::move(report);

  // Human-readable summary.
  std::ostringstream md;
  md << "# Scenario report\n\n";
  md << "ring: " << W.spec().dimension << " variables over GF(" << W.spec().p << "), seed "
     << W.spec().seed << "\n\n";
  md << "- I1 = " << scenario.I1.key() << "\n";
  md << "- I2 = " << scenario.I2.key() << "\n";
  md << "- split k = (" << scenario.k1 << ", " << scenario.k2 << "), window ("
     << scenario.window.n1max << ", " << scenario.window.n2max << "), fiber nmax "
     << scenario.fiber_nmax << "\n\n";
  md << "## Summary\n\n";
  md << "| check | verdict |\n|---|---|\n";
  for (const auto& cj : result.report["checks"])
    md << "| " << cj.value("id", "") << " | " << cj.value("verdict", "") << " |\n";
  md << "\n";
  for (const auto& cj : result.report["checks"]) {
    md << "## " << cj.value("id", "") << " (" << cj.value("verdict", "") << ")\n\n";
    if (!cj["points"].empty()) {
      md << "| point | lhs | rhs | ok |\n|---|---|---|---|\n";
      for (const auto& p : cj["points"]) {
        md << "| " << p.value("label", "") << " | " << p.value("lhs", "") << " | "
           << p.value("rhs", "") << " | " << (p.value("ok", false) ? "yes" : "NO")
           << (p.value("heuristic", false) ? " (truncation-stable)" : "") << " |\n";
      }
      md << "\n";
    }
    for (const auto& note : cj["notes"]) md << "- " << note.get<std::string>() << "\n";
    md << "\n";
  }
  result.markdown = md.str();
  return result;
}

void write_reports(const RunResult& result, const std::string& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir + "/report.json");
    out << result.report.dump(2) << "\n";
  }
  {
    std::ofstream out(dir + "/report.md");
    out << result.markdown;
  }
}

nlohmann::json recompute_for_cache(const Scenario& scenario, const std::string& comp_id,
                                   const RunOptions& options) {
  Workspace W(scenario.ring, scenario.I1, scenario.I2, scenario.k1, scenario.k2,
              scenario.ring.seed, scenario.window, scenario.fiber_nmax, options.jobs);
  if (comp_id == "hilbert_table") {
    nlohmann::json table = nlohmann::json::array();
    for (int n1 = 0; n1 <= W.window().n1max; ++n1) {
      nlohmann::json row = nlohmann::json::array();
      for (int n2 = 0; n2 <= W.window().n2max; ++n2) row.push_back(W.table().at(n1, n2));
      table.push_back(std::move(row));
    }
    return table;
  }
  if (comp_id.rfind("check:", 0) == 0)
    return check_report_to_json(run_check(comp_id.substr(6), W));
  throw CacheCorrupt("unknown cached computation id: " + comp_id);
}

}  // namespace fclab
