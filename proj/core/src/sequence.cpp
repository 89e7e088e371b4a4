#include "fclab/sequence.hpp"

#include <algorithm>

namespace fclab {

SequenceSpec generate_sequence(const MonomialIdeal& I1, int k1, const MonomialIdeal& I2, int k2,
                               const RingSpec& spec, std::uint64_t seed) {
  if (k1 < 0 || k2 < 0 || k1 + k2 > spec.dimension)
    throw ScenarioError("sequence lengths must satisfy 0 <= k1, k2 and k1 + k2 <= d");
  const PrimeField F = spec.field();
  SequenceSpec S;
  S.k1 = k1;
  S.k2 = k2;
  S.seed = seed;
  auto draw = [&](const MonomialIdeal& I, int which, int index) {
    SplitMix64 rng(fnv1a64("seq:" + std::to_string(which) + ":" + std::to_string(index),
                           seed ^ 0x5eedULL));
    const std::vector<Monomial>& gens = I.generators();
    std::vector<std::uint64_t> coeffs(gens.size());
    for (auto& c : coeffs) c = rng.nonzero(F);
    return RingElement::combination(coeffs, gens, F);
  };
  for (int i = 0; i < k1; ++i) S.elements.push_back(draw(I1, 1, i));
  for (int i = 0; i < k2; ++i) S.elements.push_back(draw(I2, 2, i));
  return S;
}

SuperficialReport verify_superficial(const SequenceSpec& S, const MonomialIdeal& I1,
                                     const MonomialIdeal& I2, const RingSpec& spec,
                                     const BidegreeWindow& window,
                                     const LengthEvaluator& lengths, int threshold) {
  const int d = spec.dimension;
  SuperficialReport report;
  report.stable_from.assign(S.elements.size(), 0);

  std::vector<RingElement> prev;  // earlier sequence elements
  for (int e = 0; e < static_cast<int>(S.elements.size()); ++e) {
    const bool in_first_block = e < S.k1;
    const RingElement& x = S.elements[e];
    int worst_ok = threshold;
    for (int n1 = 0; n1 <= window.n1max; ++n1) {
      for (int n2 = 0; n2 <= window.n2max; ++n2) {
        if (in_first_block ? n1 < threshold : n2 < threshold) continue;
        MonomialIdeal A = power_product(I1, n1, I2, n2, d);
        MonomialIdeal B = in_first_block ? power_product(I1, n1 - 1, I2, n2, d)
                                         : power_product(I1, n1, I2, n2 - 1, d);
        // l((x) cap A / x B) = l(R/(B+prev)) - l(R/(A+prev)) + l(R/(A+prev+x))
        // after dividing by the regular element x modulo prev.
        std::vector<RingElement> base = prev;
        long long lb = lengths(concat(as_elements(B), base));
        long long la = lengths(concat(as_elements(A), base));
        std::vector<RingElement> with_x = base;
        with_x.push_back(x);
        long long lax = lengths(concat(as_elements(A), with_x));
        long long excess = lb - la + lax;
        if (excess != 0) {
          report.failures.push_back({e, n1, n2, excess});
          worst_ok = std::max(worst_ok, (in_first_block ? n1 : n2) + 1);
        }
      }
    }
    report.stable_from[e] = worst_ok;
    prev.push_back(x);
  }
  // The defining containment is asymptotic; the sequence passes when every
  // element satisfies it on a nonempty top sub-window (the thresholds are
  // reported so callers can see where stability set in).
  report.pass = true;
  for (int e = 0; e < static_cast<int>(S.elements.size()); ++e) {
    const int cap = e < S.k1 ? window.n1max : window.n2max;
    if (threshold > cap) continue;  // nothing checked: vacuous pass
    if (report.stable_from[e] > cap) report.pass = false;
  }
  return report;
}

SopCertificate certify_sop(const SequenceSpec& S, const RingSpec& spec,
                           const LengthEvaluator& lengths) {
  SopCertificate cert;
  if (S.k1 + S.k2 != spec.dimension) {
    cert.diagnostics = "sequence length differs from ring dimension";
    return cert;
  }
  try {
    LengthResult r = lengths.result(S.elements);
    cert.certified = r.certificate.certified;
    cert.colength = r.length;
    if (!cert.certified) cert.diagnostics = "length not certified below cap";
  } catch (const NotFiniteLength& ex) {
    cert.diagnostics = ex.what();
  }
  return cert;
}

RegularityCertificate certify_regular(const SequenceSpec& S, const RingSpec& spec,
                                      const LengthEvaluator& lengths) {
  RegularityCertificate cert;
  const int d = spec.dimension;
  const int missing = d - (S.k1 + S.k2);
  std::vector<RingElement> full = S.elements;
  if (missing > 0) {
    const PrimeField F = spec.field();
    const MonomialIdeal m = MonomialIdeal::maximal(d);
    for (int i = 0; i < missing; ++i) {
      SplitMix64 rng(fnv1a64("sop-extension:" + std::to_string(i), S.seed ^ 0xe7e2dULL));
      std::vector<std::uint64_t> coeffs(m.generators().size());
      for (auto& c : coeffs) c = rng.nonzero(F);
      cert.extension.push_back(RingElement::combination(coeffs, m.generators(), F));
    }
    full = concat(full, cert.extension);
  }
  try {
    LengthResult r = lengths.result(full);
    cert.certified = r.certificate.certified;
    cert.extended_colength = r.length;
    if (!cert.certified) cert.diagnostics = "length not certified below cap";
  } catch (const NotFiniteLength& ex) {
    cert.diagnostics = ex.what();
  }
  return cert;
}

PreparedSequence prepare_sequence(const MonomialIdeal& I1, int k1, const MonomialIdeal& I2, int k2,
                                  const RingSpec& spec, std::uint64_t seed,
                                  const BidegreeWindow& window, const LengthEvaluator& lengths) {
  PreparedSequence out;
  std::uint64_t s = seed;
  for (int attempt = 1; attempt <= 5; ++attempt) {
    out.attempts = attempt;
    out.seq = generate_sequence(I1, k1, I2, k2, spec, s);
    out.regular = certify_regular(out.seq, spec, lengths);
    out.superficial = verify_superficial(out.seq, I1, I2, spec, window, lengths);
    if (out.regular.certified && out.superficial.pass) return out;
    out.log.push_back("seed " + std::to_string(s) + ": " +
                      (out.regular.certified ? "superficiality failed" : "regularity failed") +
                      ", reseeding");
    s = fnv1a64("reseed", s);
  }
  out.log.push_back("giving up after 5 attempts");
  return out;
}

}  // namespace fclab
