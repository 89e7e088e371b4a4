#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fclab/length.hpp"
#include "fclab/ring.hpp"
#include "fclab/sequence.hpp"

namespace fclab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// C(n + i, i) as a polynomial value, exact for every integer n.
BigInt binomial_shifted(long long n, int i);

/// H(n1, n2) = l(R/I1^n1 I2^n2) over a rectangular window, by staircase
/// counts.  Nonpositive arguments clamp to zero (the power convention);
/// arguments above the window raise WindowUnderflow.
class HilbertTable {
 public:
  HilbertTable(const MonomialIdeal& I1, const MonomialIdeal& I2, const RingSpec& spec,
               BidegreeWindow window, int jobs = 1);

  /// Wrap precomputed values (row-major over n1); used by caches and tests.
  static HilbertTable from_values(BidegreeWindow window, std::vector<long long> values);

  long long at(int n1, int n2) const;
  const BidegreeWindow& window() const { return window_; }
  const std::vector<long long>& values() const { return values_; }

 private:
  HilbertTable() = default;
  BidegreeWindow window_;
  std::vector<long long> values_;
};

/// The bivariate finite-difference operator: alternating sum of f over the
/// (k1, k2)-shifted arguments, equal to the composition of backward
/// differences in each variable.
long long delta(const HilbertTable& table, int k1, int k2, int n1, int n2);
long long delta_fn(const std::function<long long(int, int)>& f, int k1, int k2, int n1, int n2);

/// Univariate backward difference of order k at n.
long long delta1_fn(const std::function<long long(int)>& f, int k, int n);
BigRat delta1_rat(const std::function<BigRat(long long)>& f, int k, long long n);

/// Integer polynomial in the binomial basis C(n1+i1,i1) C(n2+i2,i2),
/// i1 + i2 <= total degree.
struct BivariatePolynomial {
  int total_degree = 0;
  std::map<std::pair<int, int>, BigInt> coeff;

  BigRat eval(long long n1, long long n2) const;
  BigInt eval_int(long long n1, long long n2) const;
  BigInt at(int i1, int i2) const;
};

struct BivariateFit {
  BivariatePolynomial poly;
  int fit_from = 0;  // difference-regularity corner used for the fit
  bool validated = false;
  std::vector<std::string> notes;
};

/// Exact rational fit of the table on the sub-window where all differences
/// of order degree+1 vanish, validated on `margin` extra points per
/// variable kept out of the fit.  `extend` (when given) is used once to
/// enlarge the window before giving up.  Throws FitUnstable.
BivariateFit fit_bivariate(const HilbertTable& table, int degree, int margin,
                           const std::function<HilbertTable(BidegreeWindow)>& extend = nullptr);

struct MixedMultiplicities {
  std::vector<BigInt> from_polynomial;  // e_0..e_d (top-degree coefficients)
  std::vector<long long> from_sops;     // colengths of seeded parameter sequences
  bool match = false;
  std::vector<std::string> notes;
};

/// Reads the top coefficients off a validated fit and cross-checks each one
/// against the colength of a fresh certified system of parameters with the
/// matching split between the two ideals.
MixedMultiplicities mixed_multiplicities(const BivariatePolynomial& P, const MonomialIdeal& I1,
                                         const MonomialIdeal& I2, const RingSpec& spec,
                                         std::uint64_t seed, const LengthEvaluator& lengths);

/// Hilbert function of the fiber cone of I2 with respect to I1 and its
/// signed binomial-basis coefficients f_0..f_{d-1}.  Values for n < 0 are
/// zero (graded convention).
struct FiberSeries {
  int nmax = 0;
  int dim = 0;
  std::vector<long long> values;  // n = 0..nmax
  std::vector<BigInt> f;
  int fit_from = 0;
  bool validated = false;

  long long value_at(int n) const;
  BigRat poly_at(long long n) const;
  BigInt poly_int(long long n) const;
};

FiberSeries fiber_series(const MonomialIdeal& I1, const MonomialIdeal& I2, const RingSpec& spec,
                         int nmax);

struct FiberPolyChecks {
  bool diffs_at_minus_one = false;  // order-(d-1-i) differences at -1 give (-1)^i f_i
  bool diffs_at_zero = false;       // ... at 0 give the alternating partial sums
  std::vector<std::string> notes;
};

FiberPolyChecks fiber_poly_identity_checks(const FiberSeries& series);

enum class LimitVariant {
  FirstIdealElement,   // slot element drawn from I1
  ExtraSecondElement,  // slot element is a d-th element of I2
};

struct LimitLength {
  LimitVariant variant = LimitVariant::FirstIdealElement;
  std::vector<long long> per_n;  // n = 1..nmax
  std::optional<long long> stable;
  int stabilized_from = 0;

  long long value_at(int n) const { return per_n.at(static_cast<std::size_t>(n - 1)); }
};

/// Per-n lengths l(I1 I2^n / (slot * I2^n + second_block * I1 I2^{n-1})),
/// each a difference of certified colengths; the denominator must sit inside
/// I1 I2^n (verified).  Stable value = last three values agree.
LimitLength compute_limit_length(const RingElement& slot_element,
                                 const std::vector<RingElement>& second_block,
                                 const MonomialIdeal& I1, const MonomialIdeal& I2,
                                 const RingSpec& spec, LimitVariant variant, int nmax,
                                 const LengthEvaluator& lengths);

struct DifferenceIdentityReport {
  long long sum_binomial = 0, rhs_at_minus_one = 0;
  long long sum_shifted = 0, rhs_at_zero = 0;
  bool ok = false;
};

/// Both summation identities for a finitely supported f (values on [0..N],
/// zero elsewhere): sum C(n,i-1) D^j f(n) = (-1)^i D^{j-i} f(-1) and
/// sum C(n-1,i-1) D^j f(n) = (-1)^i D^{j-i} f(0).
DifferenceIdentityReport difference_identities(const std::vector<long long>& f_values, int i,
                                               int j);

}  // namespace fclab
