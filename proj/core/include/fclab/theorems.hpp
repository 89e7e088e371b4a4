#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fclab/complex.hpp"
#include "fclab/hilbert.hpp"
#include "fclab/length.hpp"
#include "fclab/ring.hpp"
#include "fclab/sequence.hpp"

namespace fclab {

enum class Verdict { Pass, HeuristicPass, Fail, Inconclusive };

std::string verdict_name(Verdict v);

struct CheckPoint {
  std::string label;
  std::string lhs, rhs;
  bool ok = false;
  bool heuristic = false;
};

struct CheckReport {
  std::string id;
  std::string instance;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<CheckPoint> points;
  std::vector<std::string> notes;

  void settle();  // derive the verdict from points (notes may downgrade)
};

/// Everything the checkers share for one scenario: the ring, the two ideals,
/// the seeded sequences, and the lazily computed tables, fits, series and
/// limits.  All cached artifacts are immutable once computed.
class Workspace {
 public:
  Workspace(RingSpec spec, MonomialIdeal I1, MonomialIdeal I2, int k1, int k2,
            std::uint64_t seed, BidegreeWindow window, int fiber_nmax, int jobs = 1);

  const RingSpec& spec() const { return spec_; }
  const MonomialIdeal& I1() const { return I1_; }
  const MonomialIdeal& I2() const { return I2_; }
  int k1() const { return k1_; }
  int k2() const { return k2_; }
  std::uint64_t seed() const { return seed_; }
  const BidegreeWindow& window() const { return window_; }
  int fiber_nmax() const { return fiber_nmax_; }
  int jobs() const { return jobs_; }

  const LengthEvaluator& lengths() const { return lengths_; }
  std::shared_ptr<PowerQuotientCache> quotients() const { return quotients_; }

  /// Seeded sequence for an arbitrary split, memoized by (k1, k2, tag).
  const PreparedSequence& sequence(int k1, int k2, const std::string& tag);

  const PreparedSequence& main_sequence() { return sequence(k1_, k2_, "main"); }
  /// One first-ideal element plus d-1 second-ideal elements.
  const PreparedSequence& fiber_sequence() { return sequence(1, spec_.dimension - 1, "fiber"); }
  /// d second-ideal elements (the last one plays the slot role).
  const PreparedSequence& fiber_sequence_second() { return sequence(0, spec_.dimension, "fiber2"); }

  const HilbertTable& table();
  const BivariateFit& bivariate_fit();
  const MixedMultiplicities& mixed();
  const FiberSeries& fiber();

  const LimitLength& limit(LimitVariant variant);

  /// Homology lengths h_i(1, n) of the slot complex for the given variant,
  /// n = 0..fiber_nmax.
  const std::vector<std::vector<long long>>& slot_homology(LimitVariant variant);

  long long colength_I1();

 private:
  RingSpec spec_;
  MonomialIdeal I1_, I2_;
  int k1_, k2_;
  std::uint64_t seed_;
  BidegreeWindow window_;
  int fiber_nmax_;
  int jobs_;
  LengthEvaluator lengths_;
  std::shared_ptr<PowerQuotientCache> quotients_;

  std::map<std::string, PreparedSequence> sequences_;
  std::optional<HilbertTable> table_;
  std::optional<BivariateFit> fit_;
  std::optional<MixedMultiplicities> mixed_;
  std::optional<FiberSeries> fiber_;
  std::map<int, LimitLength> limits_;
  std::map<int, std::vector<std::vector<long long>>> slot_h_;
  std::optional<long long> colength_I1_;

  ComplexBuilder slot_builder(LimitVariant variant);
};

/// The alternating homology sum equals the bivariate difference of the
/// Hilbert table at every window bidegree.
CheckReport check_euler(Workspace& W);

/// Closed forms of the outer homologies against the matrix computation.
CheckReport check_identifications(Workspace& W);

/// Expected vanishing pattern of the window homology table.
CheckReport check_vanishing(Workspace& W);

/// Alternating tail sums of the (1, *) strand: nonnegative, and zero exactly
/// when the truncated-sequence homologies vanish.
CheckReport check_rigidity(Workspace& W);

/// Dimension additivity of the mapping-cone and fiber-cone sequences.
CheckReport check_ses(Workspace& W);

/// The bivariate difference of the Hilbert function equals the signed sum of
/// the closed homology terms.
CheckReport check_fundamental_lemma(Workspace& W);

/// The bivariate difference of (polynomial - function) equals the module
/// length term minus the signed homology tail; needs a full parameter split.
CheckReport check_difference_function(Workspace& W);

/// The (d-1)-st difference of the fiber Hilbert function against the mixed
/// multiplicity (variant 1) and the multiplicity of the second ideal
/// (variant 2).
CheckReport check_fiber_fundamental(Workspace& W);

/// f_0 = e_{d-1} - L and f_0 = e(I2) - L' with both limits stabilized.
CheckReport check_fiber_f0(Workspace& W);

/// The (d-1)-st difference of (fiber polynomial - fiber function) equals the
/// length term minus the stable limit minus the signed homology tail.
CheckReport check_fiber_difference(Workspace& W);

/// Summation formulas for every fiber coefficient, the f_1 formula with the
/// l(R/I1) correction, and the alternating partial-sum identity.
CheckReport check_coefficient_formulas(Workspace& W);

/// Upper bound for f_1; on equality the closed forms must hold and the upper
/// homologies of the slot complex must vanish.
CheckReport check_f1_bound(Workspace& W);

/// Windowed depth transfer between the associated graded ring and the fiber
/// cone via Koszul grade probes.
CheckReport depth_transfer(Workspace& W);

/// f_i through the summation formula; rejects i outside [1, d-1].
BigInt coefficient_from_formula(Workspace& W, int i);

const std::vector<std::string>& all_check_ids();
CheckReport run_check(const std::string& id, Workspace& W);

}  // namespace fclab
