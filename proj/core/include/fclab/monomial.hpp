#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fclab/gfp.hpp"

namespace fclab {

/// A monomial in d variables, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}
  static Monomial one(int d) { return Monomial(std::vector<std::uint32_t>(d, 0)); }
  static Monomial var(int d, int i, std::uint32_t a = 1) {
    std::vector<std::uint32_t> e(d, 0);
    e[i] = a;
    return Monomial(std::move(e));
  }

  int dim() const { return static_cast<int>(e_.size()); }
  std::uint32_t operator[](int i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exps() const { return e_; }

  std::uint32_t degree() const { return std::accumulate(e_.begin(), e_.end(), std::uint32_t{0}); }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint32_t a) { return a == 0; });
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  /// True when this is a power of a single variable (or 1, which counts as a
  /// zeroth power of every variable).
  bool is_pure_power_of(int var) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (static_cast<int>(i) != var && e_[i] != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    std::vector<std::uint32_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + m.e_[i];
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& m) const { return e_ == m.e_; }
  bool operator!=(const Monomial& m) const { return e_ != m.e_; }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t a : e_) {
      h ^= a;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::string str(const std::vector<std::string>& vars) const {
    if (is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars[i];
      if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
  }

 private:
  std::vector<std::uint32_t> e_;
};

/// Degree-lexicographic order: ascending total degree, ties broken so that
/// earlier variables come first (x before y).  This is the fixed order for
/// all quotient bases; it only needs to be total and reproducible.
struct DegLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.exps().begin(), b.exps().end(), a.exps().begin(),
                                        a.exps().end());
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return static_cast<std::size_t>(m.hash()); }
};

}  // namespace fclab
