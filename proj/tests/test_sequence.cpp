#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fclab/sequence.hpp>

using namespace fclab;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

RingSpec spec2() { return RingSpec(2, 32003, {"x", "y"}, 1); }

MonomialIdeal e1_I2() { return MonomialIdeal::normalize({mono({2, 0}), mono({0, 2})}); }

}  // namespace

TEST_CASE("generation is deterministic and draws nonzero coefficients") {
  RingSpec spec = spec2();
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  SequenceSpec a = generate_sequence(I1, 1, e1_I2(), 1, spec, 1);
  SequenceSpec b = generate_sequence(I1, 1, e1_I2(), 1, spec, 1);
  REQUIRE(a.elements.size() == 2);
  for (std::size_t i = 0; i < a.elements.size(); ++i)
    CHECK(a.elements[i].key() == b.elements[i].key());

  // x_11 = a*x + b*y with both coefficients nonzero.
  CHECK(a.elements[0].terms().size() == 2);
  for (const auto& t : a.elements[0].terms()) CHECK(t.c != 0);
  CHECK(a.elements[0].supported_in(I1));
  CHECK(a.elements[1].supported_in(e1_I2()));

  SequenceSpec c = generate_sequence(I1, 1, e1_I2(), 1, spec, 2);
  CHECK(a.elements[0].key() != c.elements[0].key());

  // k1 = 0, k2 = d puts every element in the second ideal.
  SequenceSpec full2 = generate_sequence(I1, 0, e1_I2(), 2, spec, 1);
  for (const RingElement& x : full2.elements) CHECK(x.supported_in(e1_I2()));

  CHECK_THROWS_AS(generate_sequence(I1, 2, e1_I2(), 1, spec, 1), ScenarioError);
}

TEST_CASE("generic sequences verify as superficial on the window") {
  RingSpec spec = spec2();
  LengthEvaluator lengths(spec);
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  SequenceSpec S = generate_sequence(I1, 1, e1_I2(), 1, spec, 1);
  SuperficialReport rep = verify_superficial(S, I1, e1_I2(), spec, {5, 5}, lengths);
  CHECK(rep.pass);
  // The defining containment sets in at n1 = 2 for the first element: the
  // n1 = 1 row genuinely violates it (the colon there is a full power of the
  // maximal ideal, strictly larger than the shifted product).
  CHECK(rep.stable_from[0] == 2);
  CHECK(rep.stable_from[1] == 1);
  for (const SuperficialFailure& f : rep.failures) CHECK(f.n1 <= 1);
}

TEST_CASE("a non-generic monomial choice fails superficiality persistently") {
  RingSpec spec = spec2();
  LengthEvaluator lengths(spec);
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  MonomialIdeal I2 = MonomialIdeal::normalize({mono({2, 0}), mono({0, 1})});  // (x^2, y)

  // The monomial x^2 inside I2 fails the containment at every bidegree.
  SequenceSpec bad;
  bad.k1 = 0;
  bad.k2 = 1;
  bad.seed = 0;
  bad.elements = {RingElement::from_monomial(mono({2, 0}))};
  SuperficialReport rep = verify_superficial(bad, I1, I2, spec, {5, 5}, lengths);
  CHECK(!rep.pass);
  // Fails on every bidegree with n1 >= 2, up to the window edge: never stable.
  CHECK(rep.failures.size() == 20);
  CHECK(rep.failures.front().n1 == 2);
  CHECK(rep.failures.front().n2 == 1);
  CHECK(rep.failures.front().excess > 0);
  CHECK(rep.stable_from[0] > 5);

  // A generic element of the same ideal passes everywhere.
  SequenceSpec good = generate_sequence(I1, 0, I2, 1, spec, 1);
  SuperficialReport ok = verify_superficial(good, I1, I2, spec, {5, 5}, lengths);
  CHECK(ok.pass);
  CHECK(ok.failures.empty());
}

TEST_CASE("empty window verifies vacuously") {
  RingSpec spec = spec2();
  LengthEvaluator lengths(spec);
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  SequenceSpec S = generate_sequence(I1, 1, e1_I2(), 1, spec, 1);
  SuperficialReport rep = verify_superficial(S, I1, e1_I2(), spec, {0, 0}, lengths);
  CHECK(rep.pass);
  CHECK(rep.failures.empty());
}

TEST_CASE("full systems of parameters certify by finite colength") {
  RingSpec spec = spec2();
  LengthEvaluator lengths(spec);
  MonomialIdeal I1 = MonomialIdeal::maximal(2);

  SequenceSpec S = generate_sequence(I1, 1, e1_I2(), 1, spec, 1);
  SopCertificate cert = certify_sop(S, spec, lengths);
  CHECK(cert.certified);
  CHECK(cert.colength == 2);  // complete intersection of degrees 1 and 2

  // Two multiples of x span a height-one ideal: certification must fail.
  PrimeField F = spec.field();
  SequenceSpec bad;
  bad.k1 = 2;
  bad.k2 = 0;
  bad.seed = 0;
  bad.elements = {RingElement::from_monomial(mono({1, 0})),
                  RingElement::combination({1, 1}, {mono({1, 0}), mono({1, 1})}, F)};
  SopCertificate fail = certify_sop(bad, spec, lengths);
  CHECK(!fail.certified);
  CHECK(!fail.diagnostics.empty());

  // d = 1: one generic element of an m-primary ideal is a parameter system.
  RingSpec line(1, 32003, {"t"}, 1);
  LengthEvaluator line_lengths(line);
  MonomialIdeal I = MonomialIdeal::normalize({Monomial({3})});
  SequenceSpec one = generate_sequence(I, 1, I, 0, line, 1);
  SopCertificate c1 = certify_sop(one, line, line_lengths);
  CHECK(c1.certified);
  CHECK(c1.colength == 3);
}

TEST_CASE("sop colength is seed independent") {
  RingSpec spec = spec2();
  LengthEvaluator lengths(spec);
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  long long expected = -1;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SequenceSpec S = generate_sequence(I1, 1, e1_I2(), 1, spec, seed);
    SopCertificate cert = certify_sop(S, spec, lengths);
    REQUIRE(cert.certified);
    if (expected < 0) expected = cert.colength;
    CHECK(cert.colength == expected);
  }
}

TEST_CASE("partial sequences certify through a generic extension") {
  RingSpec spec = spec2();
  LengthEvaluator lengths(spec);
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  SequenceSpec S = generate_sequence(I1, 1, e1_I2(), 0, spec, 1);
  RegularityCertificate cert = certify_regular(S, spec, lengths);
  CHECK(cert.certified);
  CHECK(cert.extension.size() == 1);
}

TEST_CASE("prepare_sequence reseeds on degenerate draws") {
  RingSpec spec = spec2();
  LengthEvaluator lengths(spec);
  MonomialIdeal I1 = MonomialIdeal::maximal(2);
  PreparedSequence prep = prepare_sequence(I1, 1, e1_I2(), 1, spec, 1, {4, 4}, lengths);
  CHECK(prep.regular.certified);
  CHECK(prep.superficial.pass);
  CHECK(prep.attempts >= 1);
}
