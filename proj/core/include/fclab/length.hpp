#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fclab/matrix.hpp"
#include "fclab/ring.hpp"

namespace fclab {

enum class TruncationEvidence {
  MonomialContainment,  // a monomial subideal already contains m^D
  SpanStability,        // m^(D-1) lies in the span and D, D+1 lengths agree
  None,
};

struct TruncationCertificate {
  int degree = 0;
  bool certified = false;
  TruncationEvidence evidence = TruncationEvidence::None;
};

struct LengthResult {
  long long length = 0;
  TruncationCertificate certificate;
};

struct LengthOptions {
  int cap = 0;    // 0 = default by dimension (40 for d<=2, 25 for d=3, 18 above)
  int start = 0;  // 0 = derived from generator degrees
};

int default_truncation_cap(int dimension);

/// Finite-dimensional model R/m^D with its monomial basis; the workspace for
/// every computation with non-monomial generators.
class TruncatedRing {
 public:
  TruncatedRing(const RingSpec& spec, int D);

  int degree() const { return D_; }
  std::size_t dim() const { return ambient_->length(); }
  const ArtinQuotient& ambient() const { return *ambient_; }
  const PrimeField& field() const { return F_; }

  /// Row span of (J + m^D)/m^D for J = (gens).
  Echelon ideal_span(const std::vector<RingElement>& gens) const;

  /// m^deg contained in the span (every monomial of that exact degree)?
  bool span_contains_degree(const Echelon& span, std::uint32_t deg) const;

  /// Columns of multiplication by f on the ambient basis.
  GfpMatrix mult_matrix(const RingElement& f) const;

 private:
  int D_;
  PrimeField F_;
  std::shared_ptr<const ArtinQuotient> ambient_;
};

/// Exact length of R_m/(gens) computed by truncated elimination, certified
/// as described on TruncationEvidence.  Throws NotFiniteLength when the cap
/// is exceeded without certification (the standard signal for an input that
/// is not m-primary).
LengthResult length_of_quotient(const std::vector<RingElement>& gens, const RingSpec& spec,
                                LengthOptions opts = {});

/// l(R/(A cap B)) = l(R/A) + l(R/B) - l(R/(A+B)) for finite-length quotients.
long long intersection_length(const std::vector<RingElement>& a_gens,
                              const std::vector<RingElement>& b_gens, const RingSpec& spec);

/// Memoizing front end used by window scans and checkers; thread-safe.
class LengthEvaluator {
 public:
  explicit LengthEvaluator(RingSpec spec) : spec_(std::move(spec)) {}

  LengthResult result(const std::vector<RingElement>& gens, LengthOptions opts = {}) const;
  long long operator()(const std::vector<RingElement>& gens, LengthOptions opts = {}) const {
    return result(gens, opts).length;
  }

  const RingSpec& spec() const { return spec_; }

 private:
  RingSpec spec_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, LengthResult> memo_;
};

/// Truncated model of the colon ideal (J : (x)) inside R/m^D: the kernel of
/// f -> (x_t f mod J + m^D)_t.  Holds the per-element constraint matrices so
/// membership stays checkable.
struct ColonData {
  int D = 0;
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;  // dim of the truncated colon subspace
  std::vector<GfpMatrix> constraints;

  bool contains(const SparseVec& f, const PrimeField& F) const;
};

ColonData colon_length_data(const std::vector<RingElement>& j_gens,
                            const std::vector<RingElement>& x, const RingSpec& spec, int D);

struct StableValue {
  long long value = 0;
  bool stable = false;
  int degree = 0;
};

/// Length of ((J1:(x1)) cap (J2:(x2))) / (den) via truncated colon data,
/// validated by agreement at two consecutive truncation degrees.
StableValue colon_pair_quotient_length(const std::vector<RingElement>& j1_gens,
                                       const std::vector<RingElement>& x1,
                                       const std::vector<RingElement>& j2_gens,
                                       const std::vector<RingElement>& x2,
                                       const std::vector<RingElement>& den_gens,
                                       const RingSpec& spec, int start_hint = 0);

/// Length of ((x) cap (A)) / (den) by inclusion-exclusion of truncated span
/// dimensions; exact for m-primary (x), otherwise stability-flagged.
StableValue intersection_quotient_length(const std::vector<RingElement>& x,
                                         const std::vector<RingElement>& a_gens,
                                         const std::vector<RingElement>& den_gens,
                                         const RingSpec& spec, int start_hint = 0);

}  // namespace fclab
