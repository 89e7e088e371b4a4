#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fclab/ring.hpp>

using namespace fclab;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

/// Independent staircase count: walk the whole box below the pure-power
/// bounds and test divisibility against every generator directly.
long long brute_force_standard_count(const MonomialIdeal& J, int d) {
  std::vector<std::uint32_t> bounds(d);
  for (int i = 0; i < d; ++i) {
    auto b = J.pure_power_bound(i);
    REQUIRE(b.has_value());
    bounds[i] = *b;
  }
  long long count = 0;
  std::vector<std::uint32_t> e(d, 0);
  while (true) {
    bool dominated = false;
    for (const Monomial& g : J.generators()) {
      bool div = true;
      for (int i = 0; i < d; ++i) div = div && g[i] <= e[i];
      if (div) {
        dominated = true;
        break;
      }
    }
    if (!dominated) ++count;
    int i = 0;
    while (i < d) {
      if (++e[i] < bounds[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  return count;
}

MonomialIdeal random_m_primary(SplitMix64& rng, int d, std::uint32_t maxdeg) {
  std::vector<Monomial> gens;
  for (int i = 0; i < d; ++i)
    gens.push_back(Monomial::var(d, i, 1 + static_cast<std::uint32_t>(rng.below(maxdeg))));
  const int extra = static_cast<int>(rng.below(3));
  for (int t = 0; t < extra; ++t) {
    std::vector<std::uint32_t> e(d);
    for (int i = 0; i < d; ++i) e[i] = static_cast<std::uint32_t>(rng.below(maxdeg));
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::normalize(std::move(gens));
}

}  // namespace

TEST_CASE("normalize reduces by divisibility") {
  // {x^2, x^3, y^2} -> {x^2, y^2}
  MonomialIdeal I = MonomialIdeal::normalize({mono({2, 0}), mono({3, 0}), mono({0, 2})});
  REQUIRE(I.generators().size() == 2);
  CHECK(I.contains(mono({3, 0})));
  CHECK(!I.contains(mono({1, 1})));

  CHECK(MonomialIdeal::normalize({}).is_zero());

  // {x^2 y, x y^2, x^2 y^2} -> {x^2 y, x y^2}
  MonomialIdeal J = MonomialIdeal::normalize({mono({2, 1}), mono({1, 2}), mono({2, 2})});
  CHECK(J.generators().size() == 2);
}

TEST_CASE("normalize is idempotent on random inputs") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Monomial> gens;
    for (int t = 0; t < 6; ++t) {
      std::vector<std::uint32_t> e{static_cast<std::uint32_t>(rng.below(5)),
                                   static_cast<std::uint32_t>(rng.below(5))};
      gens.push_back(Monomial(std::move(e)));
    }
    MonomialIdeal once = MonomialIdeal::normalize(gens);
    MonomialIdeal twice = MonomialIdeal::normalize(once.generators());
    CHECK(once == twice);
  }
}

TEST_CASE("power products follow the nonpositive-power convention") {
  MonomialIdeal I1 = MonomialIdeal::normalize({mono({1, 0}), mono({0, 1})});
  MonomialIdeal I2 = MonomialIdeal::normalize({mono({2, 0}), mono({0, 2})});

  MonomialIdeal P = power_product(I1, 1, I2, 1, 2);
  MonomialIdeal expected =
      MonomialIdeal::normalize({mono({3, 0}), mono({2, 1}), mono({1, 2}), mono({0, 3})});
  CHECK(P == expected);

  CHECK(power_product(I1, 0, I2, 0, 2).is_unit());
  CHECK(power_product(I1, -3, I2, 2, 2) == power_product(I1, 0, I2, 2, 2));
}

TEST_CASE("power products are monotone") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal I1 = random_m_primary(rng, 2, 4);
    MonomialIdeal I2 = random_m_primary(rng, 2, 4);
    for (int n1 = 0; n1 <= 2; ++n1) {
      for (int n2 = 0; n2 <= 2; ++n2) {
        MonomialIdeal big = power_product(I1, n1 + 1, I2, n2, 2);
        MonomialIdeal small = power_product(I1, n1, I2, n2, 2);
        for (const Monomial& g : big.generators()) CHECK(small.contains(g));
      }
    }
  }
}

TEST_CASE("standard bases of Artinian quotients") {
  MonomialIdeal J = MonomialIdeal::normalize({mono({2, 0}), mono({0, 2})});
  ArtinQuotient Q(J, 2);
  REQUIRE(Q.length() == 4);  // {1, x, y, xy}
  CHECK(Q.basis()[0].is_one());
  CHECK(Q.basis()[1] == mono({1, 0}));
  CHECK(Q.basis()[2] == mono({0, 1}));
  CHECK(Q.basis()[3] == mono({1, 1}));

  ArtinQuotient unit(MonomialIdeal::unit(2), 2);
  CHECK(unit.length() == 0);

  MonomialIdeal m3 = MonomialIdeal::maximal(2).pow(3, 2);
  CHECK(ArtinQuotient(m3, 2).length() == 6);

  CHECK_THROWS_AS(ArtinQuotient(MonomialIdeal::normalize({mono({2, 0})}), 2), NotMPrimary);
  CHECK_THROWS_AS(ArtinQuotient(MonomialIdeal::zero(), 2), NotMPrimary);
}

TEST_CASE("staircase counts match the brute-force oracle") {
  for (int d = 1; d <= 3; ++d) {
    SplitMix64 rng(100 + d);
    for (int trial = 0; trial < 40; ++trial) {
      MonomialIdeal J = random_m_primary(rng, d, 6);
      ArtinQuotient Q(J, d);
      CHECK(static_cast<long long>(Q.length()) == brute_force_standard_count(J, d));
    }
  }
}

TEST_CASE("reduction into a quotient drops ideal terms") {
  PrimeField F(32003);
  MonomialIdeal J = MonomialIdeal::normalize({mono({2, 0}), mono({0, 2})});
  ArtinQuotient Q(J, 2);

  RingElement f = RingElement::combination({1, 1}, {mono({1, 0}), mono({2, 0})}, F);
  SparseVec v = Q.reduce(f, F);
  REQUIRE(v.size() == 1);
  CHECK(v[0].first == *Q.index_of(mono({1, 0})));
  CHECK(v[0].second == 1);

  CHECK(Q.reduce(RingElement::zero(), F).empty());

  RingElement g = RingElement::combination({3, 2}, {mono({1, 1}), mono({3, 0})}, F);
  SparseVec w = Q.reduce(g, F);
  REQUIRE(w.size() == 1);
  CHECK(w[0].first == *Q.index_of(mono({1, 1})));
  CHECK(w[0].second == 3);
}

TEST_CASE("m-primary detection needs a pure power per variable") {
  CHECK(MonomialIdeal::normalize({mono({2, 0}), mono({0, 3})}).is_m_primary(2));
  CHECK(!MonomialIdeal::normalize({mono({2, 0})}).is_m_primary(2));
  CHECK(!MonomialIdeal::normalize({mono({1, 1})}).is_m_primary(2));
  CHECK(MonomialIdeal::unit(2).is_m_primary(2));
  CHECK(!MonomialIdeal::zero().is_m_primary(2));
}

TEST_CASE("ring spec validation") {
  CHECK_THROWS_AS(RingSpec(2, 32004, {"x", "y"}, 1), ScenarioError);
  CHECK_THROWS_AS(RingSpec(2, 32003, {"x"}, 1), ScenarioError);
  CHECK_NOTHROW(RingSpec(2, 32003, {"x", "y"}, 1));
}

TEST_CASE("ring element combinations merge and drop zeros") {
  PrimeField F(32003);
  RingElement f = RingElement::combination({5, 32003 - 5}, {mono({1, 0}), mono({1, 0})}, F);
  CHECK(f.is_zero());
  RingElement g = RingElement::combination({2, 3}, {mono({2, 0}), mono({0, 2})}, F);
  CHECK(g.terms().size() == 2);
  CHECK(g.min_degree() == 2);
  CHECK(g.supported_in(MonomialIdeal::normalize({mono({2, 0}), mono({0, 2})})));
  CHECK(!g.supported_in(MonomialIdeal::normalize({mono({2, 0})})));
}
