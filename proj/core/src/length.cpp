#include "fclab/length.hpp"

#include <algorithm>

namespace fclab {

int default_truncation_cap(int dimension) {
  if (dimension <= 2) return 40;
  if (dimension == 3) return 25;
  return 18;
}

TruncatedRing::TruncatedRing(const RingSpec& spec, int D)
    : D_(D), F_(spec.field()),
      ambient_(std::make_shared<ArtinQuotient>(MonomialIdeal::maximal(spec.dimension).pow(D, spec.dimension),
                                               spec.dimension)) {}

Echelon TruncatedRing::ideal_span(const std::vector<RingElement>& gens) const {
  Echelon span(dim(), F_);
  for (const RingElement& g : gens) {
    if (g.is_zero()) continue;
    const int mu = static_cast<int>(g.min_degree());
    for (const Monomial& u : ambient_->basis()) {
      if (static_cast<int>(u.degree()) + mu >= D_) continue;
      span.insert(ambient_->reduce(g.times(u), F_));
    }
  }
  return span;
}

bool TruncatedRing::span_contains_degree(const Echelon& span, std::uint32_t deg) const {
  for (std::uint32_t i = 0; i < ambient_->basis().size(); ++i) {
    if (ambient_->basis()[i].degree() != deg) continue;
    if (!span.in_span({{i, 1}})) return false;
  }
  return true;
}

GfpMatrix TruncatedRing::mult_matrix(const RingElement& f) const {
  const std::size_t n = dim();
  GfpMatrix M(n, n);
  for (std::uint32_t u = 0; u < n; ++u) {
    SparseVec col = ambient_->reduce(f.times(ambient_->basis()[u]), F_);
    for (const auto& [r, v] : col) M.add(r, u, v, F_);
  }
  return M;
}

namespace {

MonomialIdeal monomial_part(const std::vector<RingElement>& gens) {
  std::vector<Monomial> ms;
  for (const RingElement& g : gens)
    if (g.is_monomial()) ms.push_back(g.terms()[0].m);
  return MonomialIdeal::normalize(std::move(ms));
}

long long truncated_colength(const TruncatedRing& T, const std::vector<RingElement>& gens) {
  Echelon span = T.ideal_span(gens);
  return static_cast<long long>(T.dim() - span.rank());
}

int start_degree(const std::vector<RingElement>& gens, const LengthOptions& opts) {
  if (opts.start > 0) return opts.start;
  std::uint32_t maxdeg = 1;
  for (const RingElement& g : gens)
    for (const auto& t : g.terms()) maxdeg = std::max(maxdeg, t.m.degree());
  return static_cast<int>(maxdeg) + 2;
}

}  // namespace

LengthResult length_of_quotient(const std::vector<RingElement>& gens, const RingSpec& spec,
                                LengthOptions opts) {
  const int d = spec.dimension;
  const int cap = opts.cap > 0 ? opts.cap : default_truncation_cap(d);
  bool has_nonzero = false;
  for (const RingElement& g : gens) has_nonzero = has_nonzero || !g.is_zero();
  if (!has_nonzero) throw NotFiniteLength("length_of_quotient: zero ideal");

  // Fast exact path: a monomial subideal that is already m-primary pins the
  // truncation degree, since m^(socle+1) sits inside it.
  MonomialIdeal mono = monomial_part(gens);
  if (mono.is_m_primary(d)) {
    const int D = static_cast<int>(mono.max_standard_degree(d)) + 1;
    TruncatedRing T(spec, std::max(D, 2));
    long long len = truncated_colength(T, gens);
    return {len, {T.degree(), true, TruncationEvidence::MonomialContainment}};
  }

  int D = start_degree(gens, opts);
  while (D + 1 <= cap) {
    TruncatedRing T(spec, D);
    Echelon span = T.ideal_span(gens);
    long long len = static_cast<long long>(T.dim() - span.rank());
    if (T.span_contains_degree(span, static_cast<std::uint32_t>(D - 1))) {
      TruncatedRing T1(spec, D + 1);
      long long len1 = truncated_colength(T1, gens);
      if (len1 == len) return {len, {D, true, TruncationEvidence::SpanStability}};
    }
    ++D;
  }
  throw NotFiniteLength("length_of_quotient: no certificate below the degree cap");
}

long long intersection_length(const std::vector<RingElement>& a_gens,
                              const std::vector<RingElement>& b_gens, const RingSpec& spec) {
  long long la = length_of_quotient(a_gens, spec).length;
  long long lb = length_of_quotient(b_gens, spec).length;
  long long lsum = length_of_quotient(concat(a_gens, b_gens), spec).length;
  return la + lb - lsum;
}

LengthResult LengthEvaluator::result(const std::vector<RingElement>& gens,
                                     LengthOptions opts) const {
  std::vector<std::string> keys;
  keys.reserve(gens.size());
  for (const RingElement& g : gens) keys.push_back(g.key());
  std::sort(keys.begin(), keys.end());
  std::string key;
  for (const std::string& k : keys) key += k;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  LengthResult r = length_of_quotient(gens, spec_, opts);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(std::move(key), r);
  return r;
}

bool ColonData::contains(const SparseVec& f, const PrimeField& F) const {
  for (const GfpMatrix& C : constraints) {
    // C * f must vanish.
    for (std::size_t r = 0; r < C.rows(); ++r) {
      std::uint64_t s = 0;
      std::size_t i = 0, j = 0;
      const SparseVec& row = C.row(r);
      while (i < row.size() && j < f.size()) {
        if (row[i].first < f[j].first) ++i;
        else if (f[j].first < row[i].first) ++j;
        else {
          s = F.add(s, F.mul(row[i].second, f[j].second));
          ++i;
          ++j;
        }
      }
      if (s != 0) return false;
    }
  }
  return true;
}

ColonData colon_length_data(const std::vector<RingElement>& j_gens,
                            const std::vector<RingElement>& x, const RingSpec& spec, int D) {
  TruncatedRing T(spec, D);
  const PrimeField F = spec.field();
  Echelon span = T.ideal_span(j_gens);
  ColonData data;
  data.D = D;
  data.ambient_dim = T.dim();
  for (const RingElement& xt : x) {
    GfpMatrix C(T.dim(), T.dim());
    for (std::uint32_t u = 0; u < T.dim(); ++u) {
      SparseVec img = T.ambient().reduce(xt.times(T.ambient().basis()[u]), F);
      SparseVec res = span.residual(std::move(img));
      for (const auto& [r, v] : res) C.add(r, u, v, F);
    }
    data.constraints.push_back(std::move(C));
  }
  // Kernel dimension of the stacked constraint map; rank computed over the
  // constraint rows.
  Echelon stacked_rows(T.dim(), F);
  for (const GfpMatrix& C : data.constraints)
    for (std::size_t r = 0; r < C.rows(); ++r) stacked_rows.insert(C.row(r));
  data.dim = T.dim() - stacked_rows.rank();
  return data;
}

namespace {

int colon_start_hint(const std::vector<RingElement>& j1, const std::vector<RingElement>& j2,
                     const std::vector<RingElement>& den, const RingSpec& spec, int hint) {
  if (hint > 0) return hint;
  std::uint32_t maxdeg = 2;
  for (const auto* v : {&j1, &j2, &den})
    for (const RingElement& g : *v)
      for (const auto& t : g.terms()) maxdeg = std::max(maxdeg, t.m.degree());
  return static_cast<int>(maxdeg) + 3;
}

}  // namespace

StableValue colon_pair_quotient_length(const std::vector<RingElement>& j1_gens,
                                       const std::vector<RingElement>& x1,
                                       const std::vector<RingElement>& j2_gens,
                                       const std::vector<RingElement>& x2,
                                       const std::vector<RingElement>& den_gens,
                                       const RingSpec& spec, int start_hint) {
  const PrimeField F = spec.field();
  const int cap = default_truncation_cap(spec.dimension);
  int D = colon_start_hint(j1_gens, j2_gens, den_gens, spec, start_hint);

  auto value_at = [&](int degree) -> long long {
    TruncatedRing T(spec, degree);
    Echelon span1 = T.ideal_span(j1_gens);
    Echelon span2 = T.ideal_span(j2_gens);
    Echelon constraints(T.dim(), F);
    auto add_constraints = [&](const Echelon& span, const std::vector<RingElement>& xs) {
      for (const RingElement& xt : xs) {
        std::vector<SparseVec> cols(T.dim());
        for (std::uint32_t u = 0; u < T.dim(); ++u) {
          SparseVec img = T.ambient().reduce(xt.times(T.ambient().basis()[u]), F);
          SparseVec res = span.residual(std::move(img));
          for (const auto& [r, v] : res) cols[u].emplace_back(r, v);
        }
        // Transpose the columns into rows of the constraint block.
        std::vector<SparseVec> rows(T.dim());
        for (std::uint32_t u = 0; u < T.dim(); ++u)
          for (const auto& [r, v] : cols[u]) rows[r].emplace_back(u, v);
        for (SparseVec& row : rows)
          if (!row.empty()) constraints.insert(std::move(row));
      }
    };
    add_constraints(span1, x1);
    add_constraints(span2, x2);
    long long numerator_dim = static_cast<long long>(T.dim() - constraints.rank());
    Echelon den = T.ideal_span(den_gens);
    return numerator_dim - static_cast<long long>(den.rank());
  };

  long long prev = value_at(D);
  while (D + 1 <= cap) {
    long long next = value_at(D + 1);
    if (next == prev) return {prev, true, D};
    prev = next;
    ++D;
  }
  return {prev, false, D};
}

StableValue intersection_quotient_length(const std::vector<RingElement>& x,
                                         const std::vector<RingElement>& a_gens,
                                         const std::vector<RingElement>& den_gens,
                                         const RingSpec& spec, int start_hint) {
  const int cap = default_truncation_cap(spec.dimension);
  int D = colon_start_hint(x, a_gens, den_gens, spec, start_hint);

  auto value_at = [&](int degree) -> long long {
    TruncatedRing T(spec, degree);
    long long dx = static_cast<long long>(T.ideal_span(x).rank());
    long long da = static_cast<long long>(T.ideal_span(a_gens).rank());
    long long dsum = static_cast<long long>(T.ideal_span(concat(x, a_gens)).rank());
    long long dden = static_cast<long long>(T.ideal_span(den_gens).rank());
    return dx + da - dsum - dden;
  };

  long long prev = value_at(D);
  while (D + 1 <= cap) {
    long long next = value_at(D + 1);
    if (next == prev) return {prev, true, D};
    prev = next;
    ++D;
  }
  return {prev, false, D};
}

}  // namespace fclab
