#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fclab/hilbert.hpp>

using namespace fclab;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

RingSpec spec2() { return RingSpec(2, 32003, {"x", "y"}, 1); }

MonomialIdeal e1_I2() { return MonomialIdeal::normalize({mono({2, 0}), mono({0, 2})}); }

/// The difference operator written as the literal double sum over
/// (i, j) with binomial weights; oracle for the product-form implementation.
long long delta_double_sum(const HilbertTable& T, int k1, int k2, int n1, int n2) {
  long long total = 0;
  for (int i = 0; i <= k1 + k2; ++i) {
    long long inner = 0;
    for (int j = 0; j <= i; ++j)
      inner += binomial_ll(k1, i - j) * binomial_ll(k2, j) * T.at(n1 - (i - j), n2 - j);
    total += (i % 2 == 0) ? inner : -inner;
  }
  return total;
}

}  // namespace

TEST_CASE("Hilbert table values") {
  RingSpec spec = spec2();
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  HilbertTable T(I1, e1_I2(), spec, {3, 3});
  CHECK(T.at(1, 1) == 6);
  CHECK(T.at(0, 1) == 4);
  CHECK(T.at(2, 0) == 3);
  CHECK(T.at(0, 0) == 0);
  CHECK(T.at(-2, 1) == T.at(0, 1));  // nonpositive powers clamp
  CHECK_THROWS_AS(T.at(4, 0), WindowUnderflow);

  // Equal ideals: the table is the simplicial count C(n1+n2+1, 2), and it is
  // monotone in each argument.
  HilbertTable M(I1, I1, spec, {4, 4});
  for (int n1 = 0; n1 <= 4; ++n1) {
    for (int n2 = 0; n2 <= 4; ++n2) {
      if (n1 + n2 > 0) CHECK(M.at(n1, n2) == binomial_ll(n1 + n2 + 1, 2));
      if (n1 > 0) CHECK(M.at(n1, n2) >= M.at(n1 - 1, n2));
      if (n2 > 0) CHECK(M.at(n1, n2) >= M.at(n1, n2 - 1));
    }
  }
}

TEST_CASE("difference operator") {
  RingSpec spec = spec2();
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  HilbertTable T(I1, e1_I2(), spec, {4, 4});

  // 6 - 4 - 1 + 0 at (1,1): the (0,0) entry is the length of the zero module.
  CHECK(delta(T, 1, 1, 1, 1) == 1);
  CHECK(delta(T, 0, 0, 2, 2) == T.at(2, 2));

  // Constant synthetic table: any nontrivial difference vanishes.
  HilbertTable C = HilbertTable::from_values({3, 3}, std::vector<long long>(16, 5));
  CHECK(delta(C, 1, 1, 3, 3) == 0);
  CHECK(delta(C, 2, 0, 3, 3) == 0);
  CHECK(delta(C, 0, 0, 3, 3) == 5);

  // Product form agrees with the literal double sum on random tables.
  SplitMix64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long long> vals(25);
    for (auto& v : vals) v = static_cast<long long>(rng.below(50));
    HilbertTable R = HilbertTable::from_values({4, 4}, std::move(vals));
    for (int k1 = 0; k1 <= 2; ++k1)
      for (int k2 = 0; k2 <= 2; ++k2)
        CHECK(delta(R, k1, k2, 4, 4) == delta_double_sum(R, k1, k2, 4, 4));
  }
}

TEST_CASE("bivariate fit recovers the polynomial of equal ideals") {
  RingSpec spec = spec2();
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  HilbertTable T(I1, I1, spec, {7, 7});
  BivariateFit fit = fit_bivariate(T, 2, 3);
  CHECK(fit.validated);
  CHECK(fit.poly.at(2, 0) == 1);
  CHECK(fit.poly.at(1, 1) == 1);
  CHECK(fit.poly.at(0, 2) == 1);
  for (int n1 = 0; n1 <= 7; ++n1)
    for (int n2 = 0; n2 <= 7; ++n2)
      if (n1 + n2 > 0) CHECK(fit.poly.eval_int(n1, n2) == BigInt(T.at(n1, n2)));
}

TEST_CASE("zero tables fit to the zero polynomial") {
  HilbertTable Z = HilbertTable::from_values({6, 6}, std::vector<long long>(49, 0));
  BivariateFit fit = fit_bivariate(Z, 2, 2);
  CHECK(fit.validated);
  CHECK(fit.poly.coeff.empty());
}

TEST_CASE("mixed multiplicities from both routes") {
  RingSpec spec = spec2();
  LengthEvaluator lengths(spec);
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  HilbertTable T(I1, e1_I2(), spec, {7, 7});
  BivariateFit fit = fit_bivariate(T, 2, 3);
  REQUIRE(fit.validated);

  MixedMultiplicities mm = mixed_multiplicities(fit.poly, I1, e1_I2(), spec, 1, lengths);
  REQUIRE(mm.from_polynomial.size() == 3);
  CHECK(mm.from_polynomial[0] == 1);
  CHECK(mm.from_polynomial[1] == 2);
  CHECK(mm.from_polynomial[2] == 4);
  CHECK(mm.from_sops == std::vector<long long>{1, 2, 4});
  CHECK(mm.match);

  // Equal ideals: every mixed multiplicity equals the common multiplicity.
  HilbertTable TM(I1, I1, spec, {7, 7});
  BivariateFit fm = fit_bivariate(TM, 2, 3);
  MixedMultiplicities mmm = mixed_multiplicities(fm.poly, I1, I1, spec, 1, lengths);
  CHECK(mmm.match);
  for (const BigInt& e : mmm.from_polynomial) CHECK(e == 1);
}

TEST_CASE("fiber series values and coefficients") {
  RingSpec spec = spec2();
  MonomialIdeal I1 = MonomialIdeal::maximal(2);

  FiberSeries S = fiber_series(I1, e1_I2(), spec, 6);
  REQUIRE(S.values.size() == 7);
  for (int n = 0; n <= 6; ++n) CHECK(S.value_at(n) == n + 1);  // minimal generator counts
  CHECK(S.value_at(-3) == 0);
  REQUIRE(S.validated);
  CHECK(S.f[0] == 1);
  CHECK(S.f[1] == 0);
  CHECK(S.fit_from == 0);

  FiberPolyChecks checks = fiber_poly_identity_checks(S);
  CHECK(checks.diffs_at_minus_one);
  CHECK(checks.diffs_at_zero);

  // Equal ideals: the fiber cone is a polynomial ring.
  FiberSeries SM = fiber_series(I1, I1, spec, 6);
  CHECK(SM.validated);
  CHECK(SM.f[0] == 1);
  CHECK(SM.f[1] == 0);
  for (int n = 0; n <= 6; ++n) CHECK(SM.value_at(n) == n + 1);

  CHECK_THROWS_AS(fiber_series(I1, e1_I2(), spec, 1), FitUnstable);
}

TEST_CASE("limit lengths stabilize to the expected values") {
  RingSpec spec = spec2();
  LengthEvaluator lengths(spec);
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  MonomialIdeal I2 = e1_I2();

  // slot from I1 plus d-1 = 1 element of I2
  SequenceSpec S1 = generate_sequence(I1, 1, I2, 1, spec, 1);
  LimitLength L1 = compute_limit_length(S1.elements[0], S1.second_block(), I1, I2, spec,
                                        LimitVariant::FirstIdealElement, 6, lengths);
  REQUIRE(L1.stable.has_value());
  CHECK(*L1.stable == 1);

  // d elements of I2; the last one takes the slot
  SequenceSpec S2 = generate_sequence(I1, 0, I2, 2, spec, 1);
  LimitLength L2 = compute_limit_length(S2.elements[1], {S2.elements[0]}, I1, I2, spec,
                                        LimitVariant::ExtraSecondElement, 6, lengths);
  REQUIRE(L2.stable.has_value());
  CHECK(*L2.stable == 3);

  // Equal ideals: the limit vanishes.
  SequenceSpec SM = generate_sequence(I1, 1, I1, 1, spec, 1);
  LimitLength LM = compute_limit_length(SM.elements[0], SM.second_block(), I1, I1, spec,
                                        LimitVariant::FirstIdealElement, 6, lengths);
  REQUIRE(LM.stable.has_value());
  CHECK(*LM.stable == 0);

  // Second ideal not inside the first: the denominator escapes I1 I2^n.
  MonomialIdeal J1 = e1_I2();
  SequenceSpec bad = generate_sequence(J1, 0, I1, 2, spec, 1);
  CHECK_THROWS_AS(compute_limit_length(bad.elements[1], {bad.elements[0]}, J1, I1, spec,
                                       LimitVariant::ExtraSecondElement, 4, lengths),
                  ScenarioError);
}

TEST_CASE("finite-difference summation identities") {
  // Random finitely supported functions satisfy both identities exactly.
  SplitMix64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<long long> f(3);
    for (auto& v : f) v = static_cast<long long>(rng.below(9)) - 4;
    for (int j = 1; j <= 3; ++j) {
      for (int i = 1; i <= j; ++i) {
        DifferenceIdentityReport rep = difference_identities(f, i, j);
        CHECK(rep.ok);
      }
    }
  }

  DifferenceIdentityReport zero = difference_identities({0, 0, 0}, 1, 2);
  CHECK(zero.ok);
  CHECK(zero.sum_binomial == 0);

  // i = j telescopes to the signed value at -1 (zero here by support).
  DifferenceIdentityReport tele = difference_identities({7, -2, 5}, 2, 2);
  CHECK(tele.ok);
  CHECK(tele.rhs_at_minus_one == 0);

  CHECK_THROWS_AS(difference_identities({1}, 0, 1), ScenarioError);
}

TEST_CASE("binomial basis evaluation at negative arguments") {
  CHECK(binomial_shifted(-1, 2) == 0);   // contains the factor zero
  CHECK(binomial_shifted(-3, 2) == 1);   // (-2)(-1)/2
  CHECK(binomial_shifted(4, 0) == 1);
  CHECK(binomial_shifted(3, 2) == 10);   // C(5, 2)
}
