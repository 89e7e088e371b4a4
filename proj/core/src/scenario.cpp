#include "fclab/scenario.hpp"

#include <fstream>

#include "fclab/theorems.hpp"

namespace fclab {

nlohmann::json ideal_to_json(const MonomialIdeal& I) {
  nlohmann::json out = nlohmann::json::array();
  for (const Monomial& g : I.generators()) {
    nlohmann::json e = nlohmann::json::array();
    for (int i = 0; i < g.dim(); ++i) e.push_back(g[i]);
    out.push_back(std::move(e));
  }
  return out;
}

MonomialIdeal ideal_from_json(const nlohmann::json& j, int d) {
  if (!j.is_array()) throw ScenarioError("ideal generators must be an array");
  std::vector<Monomial> gens;
  for (const auto& e : j) {
    if (!e.is_array() || static_cast<int>(e.size()) != d)
      throw ScenarioError("each generator must list one exponent per variable");
    std::vector<std::uint32_t> exps;
    for (const auto& v : e) {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ScenarioError("exponents must be nonnegative integers");
      exps.push_back(v.get<std::uint32_t>());
    }
    gens.push_back(Monomial(std::move(exps)));
  }
  return MonomialIdeal::normalize(std::move(gens));
}

Scenario Scenario::from_json(const nlohmann::json& j) {
  Scenario s;
  try {
    if (!j.contains("vars") || !j["vars"].is_array())
      throw ScenarioError("scenario needs a vars array");
    std::vector<std::string> vars = j["vars"].get<std::vector<std::string>>();
    const int d = static_cast<int>(vars.size());
    s.ring = RingSpec(d, j.value("p", std::uint64_t{32003}), std::move(vars),
                      j.value("seed", std::uint64_t{1}));
    if (!j.contains("I1") || !j.contains("I2"))
      throw ScenarioError("scenario needs I1 and I2 generator lists");
    s.I1 = ideal_from_json(j["I1"], d);
    s.I2 = ideal_from_json(j["I2"], d);
    if (!s.I1.is_m_primary(d)) throw ScenarioError("I1 is not m-primary");
    if (!s.I2.is_m_primary(d)) throw ScenarioError("I2 is not m-primary");
    s.k1 = j.value("k1", 1);
    s.k2 = j.value("k2", d - 1);
    if (s.k1 < 0 || s.k2 < 0 || s.k1 + s.k2 < 1 || s.k1 + s.k2 > d)
      throw ScenarioError("sequence split must satisfy 1 <= k1 + k2 <= d");
    if (j.contains("window")) {
      s.window.n1max = j["window"].value("n1max", 4);
      s.window.n2max = j["window"].value("n2max", 4);
    }
    if (s.window.n1max < 1 || s.window.n2max < 1) throw ScenarioError("window must be positive");
    s.fiber_nmax = j.value("fiber_nmax", 6);
    if (s.fiber_nmax < 1) throw ScenarioError("fiber_nmax must be positive");
    if (j.contains("checks")) {
      s.checks = j["checks"].get<std::vector<std::string>>();
      const auto& known = all_check_ids();
      for (const std::string& id : s.checks)
        if (std::find(known.begin(), known.end(), id) == known.end())
          throw ScenarioError("unknown check id: " + id);
    } else {
      s.checks = all_check_ids();
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ScenarioError(std::string("malformed scenario: ") + ex.what());
  }
  return s;
}

Scenario Scenario::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + ex.what());
  }
  return from_json(j);
}

nlohmann::json Scenario::to_json() const {
  nlohmann::json j;
  j["p"] = ring.p;
  j["vars"] = ring.vars;
  j["seed"] = ring.seed;
  j["I1"] = ideal_to_json(I1);
  j["I2"] = ideal_to_json(I2);
  j["k1"] = k1;
  j["k2"] = k2;
  j["window"] = {{"n1max", window.n1max}, {"n2max", window.n2max}};
  j["fiber_nmax"] = fiber_nmax;
  j["checks"] = checks;
  return j;
}

std::string Scenario::canonical() const { return to_json().dump(); }

}  // namespace fclab
