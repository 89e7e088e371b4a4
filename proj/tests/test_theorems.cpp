#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fclab/theorems.hpp>

using namespace fclab;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

Workspace base_workspace(std::uint64_t seed = 1) {
  RingSpec spec(2, 32003, {"x", "y"}, seed);
  return Workspace(spec, MonomialIdeal::maximal(2),
                   MonomialIdeal::normalize({mono({2, 0}), mono({0, 2})}), 1, 1, seed, {4, 4},
                   6, 0);
}

Workspace equal_maximal_workspace() {
  RingSpec spec(2, 32003, {"x", "y"}, 1);
  return Workspace(spec, MonomialIdeal::maximal(2), MonomialIdeal::maximal(2), 1, 1, 1, {4, 4},
                   6, 0);
}

bool passed(const CheckReport& rep) {
  return rep.verdict == Verdict::Pass || rep.verdict == Verdict::HeuristicPass;
}

}  // namespace

TEST_CASE("workspace validation") {
  RingSpec spec(2, 32003, {"x", "y"}, 1);
  MonomialIdeal not_primary = MonomialIdeal::normalize({mono({2, 0})});
  CHECK_THROWS_AS(Workspace(spec, not_primary, MonomialIdeal::maximal(2), 1, 1, 1, {3, 3}, 4),
                  ScenarioError);
  CHECK_THROWS_AS(Workspace(spec, MonomialIdeal::maximal(2), MonomialIdeal::maximal(2), 0, 0, 1,
                            {3, 3}, 4),
                  ScenarioError);
  CHECK_THROWS_AS(Workspace(spec, MonomialIdeal::maximal(2), MonomialIdeal::maximal(2), 2, 1, 1,
                            {3, 3}, 4),
                  ScenarioError);
}

TEST_CASE("every check passes on the base instance") {
  Workspace W = base_workspace();
  for (const std::string& id : all_check_ids()) {
    CheckReport rep = run_check(id, W);
    INFO("check ", id, " verdict ", verdict_name(rep.verdict));
    CHECK(passed(rep));
    for (const CheckPoint& p : rep.points) {
      INFO(id, " point ", p.label, ": ", p.lhs, " vs ", p.rhs);
      CHECK(p.ok);
    }
  }
  CHECK_THROWS_AS(run_check("no_such_check", W), ScenarioError);
}

TEST_CASE("every check passes with equal maximal ideals") {
  Workspace W = equal_maximal_workspace();
  for (const std::string& id : all_check_ids()) {
    CheckReport rep = run_check(id, W);
    INFO("check ", id, " verdict ", verdict_name(rep.verdict));
    CHECK(passed(rep));
  }
}

TEST_CASE("fundamental lemma is exact for a full parameter split") {
  Workspace W = base_workspace();
  CheckReport rep = check_fundamental_lemma(W);
  CHECK(rep.verdict == Verdict::Pass);  // no heuristic points
  REQUIRE(rep.points.size() == 16);     // bidegrees (1..4)^2
  for (const CheckPoint& p : rep.points) CHECK(!p.heuristic);
  // The (1,1) value computed by both routes is 1.
  CHECK(rep.points.front().label == "(1,1)");
  CHECK(rep.points.front().lhs == "1");
  CHECK(rep.points.front().rhs == "1");
}

TEST_CASE("fiber multiplicity identities on the base instance") {
  Workspace W = base_workspace();

  // e = (1, 2, 4); limits 1 and 3; f0 = 1 on both routes.
  const MixedMultiplicities& mm = W.mixed();
  REQUIRE(mm.from_polynomial.size() == 3);
  CHECK(mm.from_polynomial[1] == 2);
  CHECK(mm.from_polynomial[2] == 4);
  const LimitLength& L1 = W.limit(LimitVariant::FirstIdealElement);
  const LimitLength& L2 = W.limit(LimitVariant::ExtraSecondElement);
  REQUIRE(L1.stable.has_value());
  REQUIRE(L2.stable.has_value());
  CHECK(*L1.stable == 1);
  CHECK(*L2.stable == 3);
  CHECK(W.fiber().f[0] == mm.from_polynomial[1] - BigInt(*L1.stable));
  CHECK(W.fiber().f[0] == mm.from_polynomial[2] - BigInt(*L2.stable));

  CheckReport rep = check_fiber_f0(W);
  CHECK(rep.verdict == Verdict::Pass);
  REQUIRE(rep.points.size() == 2);
  for (const CheckPoint& p : rep.points) {
    CHECK(p.lhs == "1");
    CHECK(p.rhs == "1");
  }
}

TEST_CASE("coefficient formulas reproduce f_1 = 0 term by term") {
  Workspace W = base_workspace();
  CHECK(coefficient_from_formula(W, 1) == 0);
  CHECK_THROWS_AS(coefficient_from_formula(W, 0), ScenarioError);
  CHECK_THROWS_AS(coefficient_from_formula(W, 2), ScenarioError);  // beyond d-1

  CheckReport rep = check_coefficient_formulas(W);
  CHECK(rep.verdict == Verdict::Pass);
  bool found_f1 = false;
  for (const CheckPoint& p : rep.points) {
    if (p.label == "f_1 formula") {
      found_f1 = true;
      CHECK(p.lhs == "0");
      CHECK(p.rhs == "0");
    }
  }
  CHECK(found_f1);
}

TEST_CASE("f_1 bound holds with equality and vanishing upper homologies") {
  Workspace W = base_workspace();
  CheckReport rep = check_f1_bound(W);
  CHECK(rep.verdict == Verdict::Pass);
  bool equality_noted = false;
  for (const std::string& n : rep.notes)
    equality_noted = equality_noted || n.find("equality holds") != std::string::npos;
  CHECK(equality_noted);
  bool homology_point = false;
  for (const CheckPoint& p : rep.points) {
    if (p.label == "upper homologies vanish") {
      homology_point = true;
      CHECK(p.ok);
    }
  }
  CHECK(homology_point);
}

TEST_CASE("f0 on both routes for a power of the maximal ideal") {
  // I1 = m, I2 = m^2: the value is computed, not asserted in advance; the
  // two routes must agree.
  RingSpec spec(2, 32003, {"x", "y"}, 1);
  MonomialIdeal m = MonomialIdeal::maximal(2);
  Workspace W(spec, m, m.pow(2, 2), 1, 1, 1, {4, 4}, 6, 0);
  CheckReport rep = check_fiber_f0(W);
  CHECK(passed(rep));
  REQUIRE(rep.points.size() == 2);
  CHECK(rep.points[0].lhs == rep.points[0].rhs);
  CHECK(rep.points[1].lhs == rep.points[1].rhs);
}

TEST_CASE("depth transfer never contradicts on the shipped instances") {
  {
    Workspace W = base_workspace();
    CheckReport rep = depth_transfer(W);
    CHECK(rep.verdict != Verdict::Fail);
  }
  {
    Workspace W = equal_maximal_workspace();
    CheckReport rep = depth_transfer(W);
    CHECK(rep.verdict != Verdict::Fail);
  }
}

TEST_CASE("transfer implications are not asserted without containment") {
  // I2 not inside I1: the fiber cone has degree-zero torsion and the
  // transfer statements fail there; the checker must only report.
  RingSpec spec(2, 32003, {"x", "y"}, 3);
  Workspace W(spec, MonomialIdeal::normalize({mono({2, 0}), mono({0, 2})}),
              MonomialIdeal::maximal(2), 1, 1, 3, {4, 4}, 6, 0);
  CheckReport rep = depth_transfer(W);
  CHECK(rep.verdict != Verdict::Fail);
  bool note_found = false;
  for (const std::string& n : rep.notes)
    note_found = note_found || n.find("not asserted") != std::string::npos;
  CHECK(note_found);
}

TEST_CASE("identifications surface the divergent simplified colon form") {
  Workspace W = base_workspace();
  CheckReport rep = check_identifications(W);
  CHECK(rep.verdict == Verdict::HeuristicPass);
  bool divergence = false;
  for (const std::string& n : rep.notes)
    divergence = divergence || n.find("separate-power colon form diverges") != std::string::npos;
  CHECK(divergence);
}
