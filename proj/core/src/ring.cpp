#include "fclab/ring.hpp"

#include <algorithm>
#include <map>

namespace fclab {

RingSpec::RingSpec(int d, std::uint64_t prime, std::vector<std::string> names, std::uint64_t s)
    : dimension(d), p(prime), vars(std::move(names)), seed(s) {
  validate();
}

void RingSpec::validate() const {
  if (dimension < 1) throw ScenarioError("ring dimension must be >= 1");
  if (!PrimeField::is_prime(p)) throw ScenarioError("field order must be prime");
  if (static_cast<int>(vars.size()) != dimension)
    throw ScenarioError("variable name count does not match dimension");
}

MonomialIdeal MonomialIdeal::maximal(int d) {
  std::vector<Monomial> gens;
  for (int i = 0; i < d; ++i) gens.push_back(Monomial::var(d, i));
  return normalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::normalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), DegLexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& m : minimal) {
      if (m.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }
  MonomialIdeal I;
  I.gens_ = std::move(minimal);
  return I;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::is_m_primary(int d) const {
  for (int i = 0; i < d; ++i) {
    bool found = false;
    for (const Monomial& g : gens_) {
      if (g.is_pure_power_of(i)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::optional<std::uint32_t> MonomialIdeal::pure_power_bound(int var) const {
  std::optional<std::uint32_t> best;
  for (const Monomial& g : gens_) {
    if (g.is_pure_power_of(var)) {
      std::uint32_t a = g[var];
      if (!best || a < *best) best = a;
    }
  }
  return best;
}

std::uint32_t MonomialIdeal::max_standard_degree(int d) const {
  if (!is_m_primary(d)) throw NotMPrimary("max_standard_degree: ideal is not m-primary");
  if (is_unit()) return 0;
  // Standard monomials live in the box below the pure-power bounds.
  std::uint32_t best = 0;
  std::vector<std::uint32_t> bounds(d);
  for (int i = 0; i < d; ++i) bounds[i] = *pure_power_bound(i);
  std::vector<std::uint32_t> e(d, 0);
  while (true) {
    Monomial m(e);
    if (!contains(m)) best = std::max(best, m.degree());
    int i = 0;
    while (i < d) {
      if (++e[i] < bounds[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  return best;
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& other) const {
  std::vector<Monomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return normalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::product(const MonomialIdeal& other, int d) const {
  if (is_zero() || other.is_zero()) return zero();
  if (is_unit()) return other;
  if (other.is_unit()) return *this;
  std::vector<Monomial> gens;
  gens.reserve(gens_.size() * other.gens_.size());
  for (const Monomial& a : gens_)
    for (const Monomial& b : other.gens_) gens.push_back(a * b);
  (void)d;
  return normalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::pow(int n, int d) const {
  if (n <= 0) return unit(d);
  MonomialIdeal r = *this;
  for (int i = 1; i < n; ++i) r = r.product(*this, d);
  return r;
}

std::string MonomialIdeal::key() const {
  std::string s = "[";
  for (const Monomial& g : gens_) {
    s += "(";
    for (int i = 0; i < g.dim(); ++i) {
      if (i) s += ",";
      s += std::to_string(g[i]);
    }
    s += ")";
  }
  s += "]";
  return s;
}

MonomialIdeal power_product(const MonomialIdeal& I1, int n1, const MonomialIdeal& I2, int n2,
                            int d) {
  return I1.pow(n1, d).product(I2.pow(n2, d), d);
}

RingElement RingElement::from_monomial(Monomial m, std::uint64_t c) {
  RingElement f;
  if (c != 0) f.terms_.push_back({c, std::move(m)});
  return f;
}

RingElement RingElement::combination(const std::vector<std::uint64_t>& coeffs,
                                     const std::vector<Monomial>& gens, const PrimeField& F) {
  RingElement f;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::uint64_t c = coeffs[i] % F.p();
    if (c != 0) f.terms_.push_back({c, gens[i]});
  }
  f.sort_and_merge(F);
  return f;
}

void RingElement::sort_and_merge(const PrimeField& F) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return DegLexLess{}(a.m, b.m); });
  std::vector<Term> merged;
  for (const Term& t : terms_) {
    if (!merged.empty() && merged.back().m == t.m) {
      merged.back().c = F.add(merged.back().c, t.c);
    } else {
      merged.push_back(t);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.c == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

std::uint32_t RingElement::min_degree() const {
  if (terms_.empty()) return 0;
  std::uint32_t best = terms_[0].m.degree();
  for (const Term& t : terms_) best = std::min(best, t.m.degree());
  return best;
}

RingElement RingElement::times(const Monomial& m) const {
  RingElement f;
  f.terms_.reserve(terms_.size());
  for (const Term& t : terms_) f.terms_.push_back({t.c, t.m * m});
  return f;
}

RingElement RingElement::plus(const RingElement& other, const PrimeField& F) const {
  RingElement f;
  f.terms_ = terms_;
  f.terms_.insert(f.terms_.end(), other.terms_.begin(), other.terms_.end());
  f.sort_and_merge(F);
  return f;
}

RingElement RingElement::scaled(std::uint64_t c, const PrimeField& F) const {
  RingElement f;
  c %= F.p();
  if (c == 0) return f;
  f.terms_.reserve(terms_.size());
  for (const Term& t : terms_) f.terms_.push_back({F.mul(t.c, c), t.m});
  return f;
}

bool RingElement::supported_in(const MonomialIdeal& I) const {
  for (const Term& t : terms_)
    if (!I.contains(t.m)) return false;
  return true;
}

std::string RingElement::key() const {
  std::string s = "{";
  for (const Term& t : terms_) {
    s += std::to_string(t.c) + "*(";
    for (int i = 0; i < t.m.dim(); ++i) {
      if (i) s += ",";
      s += std::to_string(t.m[i]);
    }
    s += ")";
  }
  s += "}";
  return s;
}

std::string RingElement::str(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    if (!s.empty()) s += " + ";
    if (t.c != 1 || t.m.is_one()) s += std::to_string(t.c);
    if (!t.m.is_one()) {
      if (t.c != 1) s += "*";
      s += t.m.str(vars);
    }
  }
  return s;
}

ArtinQuotient::ArtinQuotient(MonomialIdeal J, int d) : ideal_(std::move(J)), d_(d) {
  if (!ideal_.is_m_primary(d)) throw NotMPrimary("standard_basis: " + ideal_.key());
  if (ideal_.is_unit()) return;  // zero module, empty basis
  std::vector<std::uint32_t> bounds(d);
  for (int i = 0; i < d; ++i) bounds[i] = *ideal_.pure_power_bound(i);
  std::vector<std::uint32_t> e(d, 0);
  while (true) {
    Monomial m(e);
    if (!ideal_.contains(m)) basis_.push_back(std::move(m));
    int i = 0;
    while (i < d) {
      if (++e[i] < bounds[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  std::sort(basis_.begin(), basis_.end(), DegLexLess{});
  index_.reserve(basis_.size());
  for (std::uint32_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::uint32_t> ArtinQuotient::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVec ArtinQuotient::reduce(const RingElement& f, const PrimeField& F) const {
  std::map<std::uint32_t, std::uint64_t> acc;
  for (const RingElement::Term& t : f.terms()) {
    auto idx = index_of(t.m);
    if (!idx) continue;  // monomial lies in the ideal
    acc[*idx] = F.add(acc.count(*idx) ? acc[*idx] : 0, t.c);
  }
  SparseVec v;
  for (auto& [i, c] : acc)
    if (c != 0) v.emplace_back(i, c);
  return v;
}

std::vector<RingElement> as_elements(const MonomialIdeal& I) {
  std::vector<RingElement> v;
  v.reserve(I.generators().size());
  for (const Monomial& g : I.generators()) v.push_back(RingElement::from_monomial(g));
  return v;
}

std::vector<RingElement> concat(std::vector<RingElement> a, const std::vector<RingElement>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace fclab
