#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fclab/length.hpp"
#include "fclab/ring.hpp"

namespace fclab {

/// A candidate superficial/regular sequence: k1 elements drawn from I1
/// followed by k2 from I2, each a seeded generic combination of the parent
/// ideal's minimal generators with nonzero coefficients.
struct SequenceSpec {
  int k1 = 0;
  int k2 = 0;
  std::vector<RingElement> elements;  // k1 in I1, then k2 in I2
  std::uint64_t seed = 0;

  std::vector<RingElement> first_block() const {
    return {elements.begin(), elements.begin() + k1};
  }
  std::vector<RingElement> second_block() const {
    return {elements.begin() + k1, elements.end()};
  }
};

/// Deterministic given (ideals, k1, k2, seed); requires k1 + k2 <= d.
SequenceSpec generate_sequence(const MonomialIdeal& I1, int k1, const MonomialIdeal& I2, int k2,
                               const RingSpec& spec, std::uint64_t seed);

struct BidegreeWindow {
  int n1max = 4;
  int n2max = 4;
};

struct SuperficialFailure {
  int element;  // position in the sequence
  int n1, n2;
  long long excess;  // l((x) cap I1^n1 I2^n2 / x * shifted product), should be 0
};

struct SuperficialReport {
  bool pass = false;
  std::vector<SuperficialFailure> failures;
  /// Minimal threshold c such that the defining containment holds at every
  /// checked bidegree with n1 >= c (first block) resp. n2 >= c (second
  /// block); one entry per element, window max + 1 when it never holds.
  std::vector<int> stable_from;
};

/// Checks the defining containment of superficiality as a length identity at
/// every window bidegree above the threshold, element by element working
/// modulo the earlier elements.  All lengths are certified truncations.
SuperficialReport verify_superficial(const SequenceSpec& S, const MonomialIdeal& I1,
                                     const MonomialIdeal& I2, const RingSpec& spec,
                                     const BidegreeWindow& window,
                                     const LengthEvaluator& lengths, int threshold = 1);

struct SopCertificate {
  bool certified = false;
  long long colength = 0;  // l(R/(x)) when certified
  std::string diagnostics;
};

/// Full-length sequences (k1 + k2 = d): m-primariness of (x) certifies a
/// regular sequence in the Cohen-Macaulay model.
SopCertificate certify_sop(const SequenceSpec& S, const RingSpec& spec,
                           const LengthEvaluator& lengths);

/// Partial sequences are certified by extending with seeded generic linear
/// forms to a full system of parameters (a prefix of a regular sequence is
/// regular); records the extension used.
struct RegularityCertificate {
  bool certified = false;
  long long extended_colength = 0;
  std::vector<RingElement> extension;
  std::string diagnostics;
};

RegularityCertificate certify_regular(const SequenceSpec& S, const RingSpec& spec,
                                      const LengthEvaluator& lengths);

/// Generate-and-verify with automatic reseed on genericity failures (small
/// field accidents); up to five attempts, all logged in the report.
struct PreparedSequence {
  SequenceSpec seq;
  SuperficialReport superficial;
  RegularityCertificate regular;
  int attempts = 1;
  std::vector<std::string> log;
};

PreparedSequence prepare_sequence(const MonomialIdeal& I1, int k1, const MonomialIdeal& I2, int k2,
                                  const RingSpec& spec, std::uint64_t seed,
                                  const BidegreeWindow& window, const LengthEvaluator& lengths);

}  // namespace fclab
