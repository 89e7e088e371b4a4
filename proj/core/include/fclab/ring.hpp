#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fclab/errors.hpp"
#include "fclab/gfp.hpp"
#include "fclab/monomial.hpp"

namespace fclab {

/// The ambient graded model: k[x_1..x_d] over GF(p), maximal ideal
/// (x_1..x_d).  The seed fixes every random draw made downstream.
struct RingSpec {
  int dimension = 2;
  std::uint64_t p = 32003;
  std::vector<std::string> vars = {"x", "y"};
  std::uint64_t seed = 1;

  RingSpec() = default;
  RingSpec(int d, std::uint64_t prime, std::vector<std::string> names, std::uint64_t s);

  PrimeField field() const { return PrimeField(p); }
  void validate() const;
};

/// Monomial ideal given by its minimal generators.  The empty set encodes
/// the zero ideal; {1} encodes the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero() { return MonomialIdeal(); }
  static MonomialIdeal unit(int d) {
    MonomialIdeal I;
    I.gens_.push_back(Monomial::one(d));
    return I;
  }
  /// Maximal ideal (x_1..x_d).
  static MonomialIdeal maximal(int d);

  /// Divisibility-reduce a generating set to minimal generators.
  static MonomialIdeal normalize(std::vector<Monomial> gens);

  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const;

  /// m-primary test: every variable has a pure-power generator.
  bool is_m_primary(int d) const;

  /// Exponent of the minimal pure-power generator in variable i, or nullopt.
  std::optional<std::uint32_t> pure_power_bound(int var) const;

  /// Largest total degree of a monomial outside the ideal, i.e. the socle
  /// degree of the quotient.  Requires m-primary.  m^(value+1) is contained
  /// in the ideal.
  std::uint32_t max_standard_degree(int d) const;

  MonomialIdeal sum(const MonomialIdeal& other) const;
  MonomialIdeal product(const MonomialIdeal& other, int d) const;
  MonomialIdeal pow(int n, int d) const;  // n <= 0 gives the unit ideal

  bool operator==(const MonomialIdeal& other) const { return gens_ == other.gens_; }

  /// Canonical string, used as a cache key and in reports.
  std::string key() const;

 private:
  std::vector<Monomial> gens_;  // minimal, DegLex-sorted
};

/// I1^{n1} I2^{n2} with the convention I^n = R for n <= 0, so the quotient
/// module R/I1^{n1}I2^{n2} vanishes exactly when both exponents are <= 0.
MonomialIdeal power_product(const MonomialIdeal& I1, int n1, const MonomialIdeal& I2, int n2,
                            int d);

/// Sparse polynomial over GF(p): sorted terms, no zero coefficients, no
/// repeated monomials.
class RingElement {
 public:
  struct Term {
    std::uint64_t c;
    Monomial m;
  };

  RingElement() = default;
  static RingElement zero() { return RingElement(); }
  static RingElement from_monomial(Monomial m, std::uint64_t c = 1);
  /// Sum of c_i * g_i; zero coefficients are dropped.
  static RingElement combination(const std::vector<std::uint64_t>& coeffs,
                                 const std::vector<Monomial>& gens, const PrimeField& F);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t min_degree() const;  // 0 for the zero element

  RingElement times(const Monomial& m) const;
  RingElement plus(const RingElement& other, const PrimeField& F) const;
  RingElement scaled(std::uint64_t c, const PrimeField& F) const;

  /// True when every term is a multiple of some generator of I.
  bool supported_in(const MonomialIdeal& I) const;

  bool is_monomial() const { return terms_.size() == 1; }

  std::string key() const;
  std::string str(const std::vector<std::string>& vars) const;

 private:
  std::vector<Term> terms_;  // DegLex-sorted by monomial
  void sort_and_merge(const PrimeField& F);
};

using SparseVec = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

/// Artinian quotient R/J for an m-primary monomial ideal J: the ordered
/// standard-monomial basis (everything under the staircase) plus an index.
class ArtinQuotient {
 public:
  ArtinQuotient(MonomialIdeal J, int d);  // throws NotMPrimary

  const MonomialIdeal& ideal() const { return ideal_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t length() const { return basis_.size(); }
  int dim_vars() const { return d_; }

  std::optional<std::uint32_t> index_of(const Monomial& m) const;

  /// Coordinates of f in the standard basis; terms inside J are dropped.
  SparseVec reduce(const RingElement& f, const PrimeField& F) const;

 private:
  MonomialIdeal ideal_;
  int d_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

/// Convenience wrappers.
std::vector<RingElement> as_elements(const MonomialIdeal& I);
std::vector<RingElement> concat(std::vector<RingElement> a, const std::vector<RingElement>& b);

}  // namespace fclab
