// Command-line front end: scenario runner, sequence tools, Hilbert/fiber
// queries, per-theorem checks and cache maintenance.
//
// Exit codes: 0 all pass, 1 malformed input, 2 check failure, 3 inconclusive.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include <fclab/report.hpp>

using namespace fclab;

namespace {

struct Common {
  std::string scenario_path;
  std::string window_arg;
  std::string cache_dir;
  int jobs = 0;
  std::uint64_t seeds = 0;  // seed override
};

Scenario load_scenario(Common& common) {
  if (common.scenario_path.empty()) throw ScenarioError("--scenario is required");
  Scenario s = Scenario::load(common.scenario_path);
  if (!common.window_arg.empty()) {
    int n1 = 0, n2 = 0;
    if (std::sscanf(common.window_arg.c_str(), "%d,%d", &n1, &n2) != 2 || n1 < 1 || n2 < 1)
      throw ScenarioError("--window expects n1max,n2max");
    s.window = {n1, n2};
  }
  if (common.seeds != 0) s.ring.seed = common.seeds;
  return s;
}

std::string cache_dir_or_env(const Common& common) {
  if (!common.cache_dir.empty()) return common.cache_dir;
  const char* env = std::getenv("FCLAB_CACHE_DIR");
  return env ? env : "";
}

Workspace make_workspace(const Scenario& s, int jobs) {
  return Workspace(s.ring, s.I1, s.I2, s.k1, s.k2, s.ring.seed, s.window, s.fiber_nmax, jobs);
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--scenario", common.scenario_path, "scenario JSON file");
  cmd->add_option("--window", common.window_arg, "override window as n1max,n2max");
  cmd->add_option("--jobs", common.jobs, "worker threads (0 = all cores)");
  cmd->add_option("--cache-dir", common.cache_dir,
                  "cache directory (or FCLAB_CACHE_DIR)");
  cmd->add_option("--seeds", common.seeds, "override the scenario seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bigraded complexes, Hilbert data and fiber-cone invariants for pairs of "
               "monomial ideals over a prime field"};
  app.require_subcommand(1);
  Common common;

  // run
  std::string out_dir = ".";
  CLI::App* run = app.add_subcommand("run", "run the scenario pipeline and write reports");
  add_common(run, common);
  run->add_option("--out", out_dir, "output directory for report.json / report.md");

  // seq
  CLI::App* seq = app.add_subcommand("seq", "sequence generation and verification");
  seq->require_subcommand(1);
  int seq_k1 = -1, seq_k2 = -1;
  CLI::App* seq_gen = seq->add_subcommand("generate", "generate a seeded sequence");
  add_common(seq_gen, common);
  seq_gen->add_option("--k1", seq_k1, "first-block length");
  seq_gen->add_option("--k2", seq_k2, "second-block length");
  CLI::App* seq_verify = seq->add_subcommand("verify", "verify superficiality and regularity");
  add_common(seq_verify, common);
  seq_verify->add_option("--k1", seq_k1, "first-block length");
  seq_verify->add_option("--k2", seq_k2, "second-block length");

  // hilbert
  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert table and polynomial fit");
  hilbert->require_subcommand(1);
  CLI::App* hilbert_table = hilbert->add_subcommand("table", "print the window table");
  add_common(hilbert_table, common);
  CLI::App* hilbert_fit = hilbert->add_subcommand("fit", "fit and print the polynomial");
  add_common(hilbert_fit, common);

  // complex
  CLI::App* complex_cmd = app.add_subcommand("complex", "complex homology over a window");
  complex_cmd->require_subcommand(1);
  int cx_k1 = -1, cx_k2 = -1, cx_n1max = -1, cx_n2max = -1;
  CLI::App* homology = complex_cmd->add_subcommand("homology", "JSON lines (i, n1, n2, h_i)");
  add_common(homology, common);
  homology->add_option("--k1", cx_k1, "first-block length");
  homology->add_option("--k2", cx_k2, "second-block length");
  homology->add_option("--n1max", cx_n1max, "window bound in n1");
  homology->add_option("--n2max", cx_n2max, "window bound in n2");

  // fiber
  CLI::App* fiber = app.add_subcommand("fiber", "fiber-cone series and coefficients");
  fiber->require_subcommand(1);
  int fiber_nmax_arg = -1;
  CLI::App* fiber_series_cmd = fiber->add_subcommand("series", "print the fiber Hilbert values");
  add_common(fiber_series_cmd, common);
  fiber_series_cmd->add_option("--nmax", fiber_nmax_arg, "series bound");
  CLI::App* fiber_coeffs = fiber->add_subcommand("coefficients", "print the fitted coefficients");
  add_common(fiber_coeffs, common);
  fiber_coeffs->add_option("--nmax", fiber_nmax_arg, "series bound");

  // check
  CLI::App* check = app.add_subcommand("check", "run one named check");
  std::string check_id;
  check->add_option("id", check_id, "check id")->required();
  add_common(check, common);

  // cache
  CLI::App* cache_cmd = app.add_subcommand("cache", "cache maintenance");
  cache_cmd->require_subcommand(1);
  CLI::App* cache_gc = cache_cmd->add_subcommand("gc", "drop stale entries");
  add_common(cache_gc, common);
  CLI::App* cache_verify = cache_cmd->add_subcommand("verify", "recompute a sample and compare");
  add_common(cache_verify, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      Scenario s = load_scenario(common);
      RunOptions options;
      options.jobs = common.jobs;
      options.cache_dir = cache_dir_or_env(common);
      RunResult result = run_scenario(s, options);
      write_reports(result, out_dir);
      std::cout << result.report["summary"].dump() << "\n";
      return result.exit_code;
    }

    if (*seq_gen || *seq_verify) {
      Scenario s = load_scenario(common);
      if (seq_k1 >= 0) s.k1 = seq_k1;
      if (seq_k2 >= 0) s.k2 = seq_k2;
      LengthEvaluator lengths(s.ring);
      if (*seq_gen) {
        SequenceSpec S = generate_sequence(s.I1, s.k1, s.I2, s.k2, s.ring, s.ring.seed);
        nlohmann::json j;
        j["k1"] = S.k1;
        j["k2"] = S.k2;
        j["seed"] = S.seed;
        nlohmann::json elems = nlohmann::json::array();
        for (const RingElement& x : S.elements) elems.push_back(x.str(s.ring.vars));
        j["elements"] = std::move(elems);
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      PreparedSequence prep =
          prepare_sequence(s.I1, s.k1, s.I2, s.k2, s.ring, s.ring.seed, s.window, lengths);
      nlohmann::json j;
      j["superficial_pass"] = prep.superficial.pass;
      j["stable_from"] = prep.superficial.stable_from;
      j["regular_certified"] = prep.regular.certified;
      j["attempts"] = prep.attempts;
      nlohmann::json failures = nlohmann::json::array();
      for (const SuperficialFailure& f : prep.superficial.failures)
        failures.push_back({{"element", f.element}, {"n1", f.n1}, {"n2", f.n2},
                            {"excess", f.excess}});
      j["failures"] = std::move(failures);
      std::cout << j.dump(2) << "\n";
      return (prep.superficial.pass && prep.regular.certified) ? 0 : 2;
    }

    if (*hilbert_table || *hilbert_fit) {
      Scenario s = load_scenario(common);
      Workspace W = make_workspace(s, common.jobs);
      if (*hilbert_table) {
        nlohmann::json rows = nlohmann::json::array();
        for (int n1 = 0; n1 <= s.window.n1max; ++n1) {
          nlohmann::json row = nlohmann::json::array();
          for (int n2 = 0; n2 <= s.window.n2max; ++n2) row.push_back(W.table().at(n1, n2));
          rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << "\n";
        return 0;
      }
      const BivariateFit& fit = W.bivariate_fit();
      const MixedMultiplicities& mm = W.mixed();
      nlohmann::json j;
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& [idx, e] : fit.poly.coeff)
        coeffs.push_back({{"i1", idx.first}, {"i2", idx.second},
                          {"e", static_cast<long long>(e)}});
      j["coefficients"] = std::move(coeffs);
      j["fit_from"] = fit.fit_from;
      j["validated"] = fit.validated;
      nlohmann::json es = nlohmann::json::array();
      for (const BigInt& e : mm.from_polynomial) es.push_back(static_cast<long long>(e));
      j["mixed_multiplicities"] = std::move(es);
      j["mixed_from_sops"] = mm.from_sops;
      j["mixed_match"] = mm.match;
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*homology) {
      Scenario s = load_scenario(common);
      if (cx_k1 >= 0) s.k1 = cx_k1;
      if (cx_k2 >= 0) s.k2 = cx_k2;
      if (cx_n1max >= 0) s.window.n1max = cx_n1max;
      if (cx_n2max >= 0) s.window.n2max = cx_n2max;
      Workspace W = make_workspace(s, common.jobs);
      const PreparedSequence& S = W.main_sequence();
      ComplexBuilder b(W.quotients(), S.seq.first_block(), S.seq.second_block());
      HomologyWindowTable T = homology_window(b, s.window, common.jobs);
      for (int n1 = 0; n1 <= s.window.n1max; ++n1)
        for (int n2 = 0; n2 <= s.window.n2max; ++n2)
          for (int i = 0; i <= s.k1 + s.k2; ++i) {
            nlohmann::json row = {{"i", i}, {"n1", n1}, {"n2", n2}, {"h", T.h(i, n1, n2)}};
            std::cout << row.dump() << "\n";
          }
      return 0;
    }

    if (*fiber_series_cmd || *fiber_coeffs) {
      Scenario s = load_scenario(common);
      if (fiber_nmax_arg >= 1) s.fiber_nmax = fiber_nmax_arg;
      Workspace W = make_workspace(s, common.jobs);
      const FiberSeries& F = W.fiber();
      nlohmann::json j;
      if (*fiber_series_cmd) {
        j["values"] = F.values;
      } else {
        nlohmann::json fs = nlohmann::json::array();
        for (const BigInt& f : F.f) fs.push_back(static_cast<long long>(f));
        j["coefficients"] = std::move(fs);
        j["fit_from"] = F.fit_from;
        j["validated"] = F.validated;
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*check) {
      Scenario s = load_scenario(common);
      Workspace W = make_workspace(s, common.jobs);
      CheckReport rep = run_check(check_id, W);
      std::cout << check_report_to_json(rep).dump(2) << "\n";
      if (rep.verdict == Verdict::Fail) return 2;
      if (rep.verdict == Verdict::Inconclusive) return 3;
      return 0;
    }

    if (*cache_gc || *cache_verify) {
      ResultCache cache(cache_dir_or_env(common));
      if (!cache.enabled()) throw ScenarioError("no cache directory configured");
      if (*cache_gc) {
        std::cout << "{\"removed\":" << cache.gc() << "}\n";
        return 0;
      }
      Scenario s = load_scenario(common);
      RunOptions options;
      options.jobs = common.jobs;
      ResultCache::VerifyResult vr = cache.verify(s.canonical(), [&](const std::string& id) {
        return recompute_for_cache(s, id, options);
      });
      nlohmann::json j = {{"checked", vr.checked}, {"matched", vr.matched},
                          {"corrupt", vr.corrupt}};
      std::cout << j.dump() << "\n";
      if (!vr.corrupt.empty()) {
        std::cerr << "cache corrupt\n";
        return 2;
      }
      return 0;
    }
  } catch (const ScenarioError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
