#include "fclab/hilbert.hpp"

#include <algorithm>

#include "fclab/parallel.hpp"

namespace fclab {

BigInt binomial_shifted(long long n, int i) {
  if (i < 0) return 0;
  BigInt num = 1;
  for (int t = 1; t <= i; ++t) num *= BigInt(n + t);
  BigInt fact = 1;
  for (int t = 2; t <= i; ++t) fact *= t;
  return num / fact;
}

HilbertTable::HilbertTable(const MonomialIdeal& I1, const MonomialIdeal& I2, const RingSpec& spec,
                           BidegreeWindow window, int jobs)
    : window_(window) {
  const int d = spec.dimension;
  const std::size_t count =
      static_cast<std::size_t>(window.n1max + 1) * static_cast<std::size_t>(window.n2max + 1);
  values_.assign(count, 0);
  parallel_for(jobs, count, [&](std::size_t p) {
    const int n1 = static_cast<int>(p / (window.n2max + 1));
    const int n2 = static_cast<int>(p % (window.n2max + 1));
    ArtinQuotient q(power_product(I1, n1, I2, n2, d), d);
    values_[p] = static_cast<long long>(q.length());
  });
}

HilbertTable HilbertTable::from_values(BidegreeWindow window, std::vector<long long> values) {
  HilbertTable T;
  T.window_ = window;
  if (values.size() != static_cast<std::size_t>(window.n1max + 1) *
                           static_cast<std::size_t>(window.n2max + 1))
    throw ScenarioError("value count does not match the window");
  T.values_ = std::move(values);
  return T;
}

long long HilbertTable::at(int n1, int n2) const {
  const int a = std::max(n1, 0), b = std::max(n2, 0);
  if (a > window_.n1max || b > window_.n2max)
    throw WindowUnderflow("Hilbert table queried beyond its window");
  return values_[static_cast<std::size_t>(a) * (window_.n2max + 1) + b];
}

long long delta_fn(const std::function<long long(int, int)>& f, int k1, int k2, int n1, int n2) {
  long long total = 0;
  for (int a = 0; a <= k1; ++a) {
    for (int b = 0; b <= k2; ++b) {
      long long c = binomial_ll(k1, a) * binomial_ll(k2, b);
      long long term = c * f(n1 - a, n2 - b);
      total += ((a + b) % 2 == 0) ? term : -term;
    }
  }
  return total;
}

long long delta(const HilbertTable& table, int k1, int k2, int n1, int n2) {
  return delta_fn([&](int a, int b) { return table.at(a, b); }, k1, k2, n1, n2);
}

long long delta1_fn(const std::function<long long(int)>& f, int k, int n) {
  long long total = 0;
  for (int t = 0; t <= k; ++t) {
    long long term = binomial_ll(k, t) * f(n - t);
    total += (t % 2 == 0) ? term : -term;
  }
  return total;
}

BigRat delta1_rat(const std::function<BigRat(long long)>& f, int k, long long n) {
  BigRat total = 0;
  for (int t = 0; t <= k; ++t) {
    BigRat term = BigRat(binomial_ll(k, t)) * f(n - t);
    if (t % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

BigRat BivariatePolynomial::eval(long long n1, long long n2) const {
  BigRat total = 0;
  for (const auto& [idx, e] : coeff)
    total += BigRat(e * binomial_shifted(n1, idx.first) * binomial_shifted(n2, idx.second));
  return total;
}

BigInt BivariatePolynomial::eval_int(long long n1, long long n2) const {
  BigRat v = eval(n1, n2);
  if (denominator(v) != 1) throw FitUnstable("polynomial value is not an integer");
  return numerator(v);
}

BigInt BivariatePolynomial::at(int i1, int i2) const {
  auto it = coeff.find({i1, i2});
  return it == coeff.end() ? BigInt(0) : it->second;
}

namespace {

/// Exact Gaussian elimination; returns the unique solution of the
/// overdetermined system when it exists.
std::optional<std::vector<BigRat>> solve_exact(std::vector<std::vector<BigRat>> A,
                                               std::vector<BigRat> b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  std::vector<std::size_t> pivot_rows;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && A[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(A[pr], A[r]);
    std::swap(b[pr], b[r]);
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || A[rr][c] == 0) continue;
      BigRat factor = A[rr][c] / A[r][c];
      for (std::size_t cc = c; cc < cols; ++cc) A[rr][cc] -= factor * A[r][cc];
      b[rr] -= factor * b[r];
    }
    pivot_rows.push_back(c);
    ++r;
  }
  if (pivot_rows.size() != cols) return std::nullopt;  // underdetermined
  for (std::size_t rr = r; rr < rows; ++rr)
    if (b[rr] != 0) return std::nullopt;  // inconsistent
  std::vector<BigRat> x(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    // After full elimination row i has its pivot at pivot_rows[i].
    x[pivot_rows[i]] = b[i] / A[i][pivot_rows[i]];
  }
  return x;
}

std::vector<std::pair<int, int>> basis_indices(int degree) {
  std::vector<std::pair<int, int>> idx;
  for (int i1 = 0; i1 <= degree; ++i1)
    for (int i2 = 0; i2 + i1 <= degree; ++i2) idx.emplace_back(i1, i2);
  return idx;
}

bool delta_regular_from(const HilbertTable& T, int degree, int s, int n1hi, int n2hi) {
  for (int a = 0; a <= degree + 1; ++a) {
    const int b = degree + 1 - a;
    for (int n1 = s + a; n1 <= n1hi; ++n1)
      for (int n2 = s + b; n2 <= n2hi; ++n2)
        if (delta(T, a, b, n1, n2) != 0) return false;
  }
  return true;
}

std::optional<BivariateFit> try_fit(const HilbertTable& T, int degree, int margin) {
  const int n1fit = T.window().n1max - margin;
  const int n2fit = T.window().n2max - margin;
  const auto idx = basis_indices(degree);
  for (int s = 0; s + degree <= std::min(n1fit, n2fit); ++s) {
    if (!delta_regular_from(T, degree, s, n1fit, n2fit)) continue;
    std::vector<std::vector<BigRat>> A;
    std::vector<BigRat> b;
    for (int n1 = s; n1 <= n1fit; ++n1) {
      for (int n2 = s; n2 <= n2fit; ++n2) {
        std::vector<BigRat> row;
        row.reserve(idx.size());
        for (const auto& [i1, i2] : idx)
          row.emplace_back(binomial_shifted(n1, i1) * binomial_shifted(n2, i2));
        A.push_back(std::move(row));
        b.emplace_back(T.at(n1, n2));
      }
    }
    auto sol = solve_exact(std::move(A), std::move(b));
    if (!sol) continue;
    BivariateFit fit;
    fit.fit_from = s;
    fit.poly.total_degree = degree;
    bool integral = true;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (denominator((*sol)[i]) != 1) {
        integral = false;
        break;
      }
      BigInt e = numerator((*sol)[i]);
      if (e != 0) fit.poly.coeff[idx[i]] = e;
    }
    if (!integral) continue;
    bool valid = true;
    for (int n1 = s; n1 <= T.window().n1max && valid; ++n1) {
      for (int n2 = s; n2 <= T.window().n2max && valid; ++n2) {
        if (n1 <= n1fit && n2 <= n2fit) continue;
        valid = fit.poly.eval_int(n1, n2) == T.at(n1, n2);
      }
    }
    if (!valid) {
      fit.notes.push_back("validation failed from corner " + std::to_string(s));
      continue;
    }
    fit.validated = true;
    return fit;
  }
  return std::nullopt;
}

}  // namespace

BivariateFit fit_bivariate(const HilbertTable& table, int degree, int margin,
                           const std::function<HilbertTable(BidegreeWindow)>& extend) {
  if (auto fit = try_fit(table, degree, margin)) return *fit;
  if (extend) {
    BidegreeWindow bigger{table.window().n1max + 2, table.window().n2max + 2};
    HilbertTable T2 = extend(bigger);
    if (auto fit = try_fit(T2, degree, margin)) {
      fit->notes.push_back("fit succeeded after one window extension");
      return *fit;
    }
  }
  throw FitUnstable("bivariate fit failed to validate");
}

MixedMultiplicities mixed_multiplicities(const BivariatePolynomial& P, const MonomialIdeal& I1,
                                         const MonomialIdeal& I2, const RingSpec& spec,
                                         std::uint64_t seed, const LengthEvaluator& lengths) {
  MixedMultiplicities out;
  const int d = spec.dimension;
  out.match = true;
  for (int i = 0; i <= d; ++i) {
    out.from_polynomial.push_back(P.at(d - i, i));
    long long len = -1;
    for (int attempt = 0; attempt < 5 && len < 0; ++attempt) {
      std::uint64_t s = fnv1a64("mixed:" + std::to_string(i) + ":" + std::to_string(attempt), seed);
      SequenceSpec S = generate_sequence(I1, d - i, I2, i, spec, s);
      try {
        LengthResult r = lengths.result(S.elements);
        if (r.certificate.certified) len = r.length;
      } catch (const NotFiniteLength&) {
        // small-field accident; reseed
      }
    }
    if (len < 0) {
      out.notes.push_back("no certified parameter sequence for split " + std::to_string(i));
      out.match = false;
      len = 0;
    }
    out.from_sops.push_back(len);
    if (BigInt(len) != out.from_polynomial.back()) out.match = false;
  }
  return out;
}

long long FiberSeries::value_at(int n) const {
  if (n < 0) return 0;
  if (n > nmax) throw WindowUnderflow("fiber series queried beyond nmax");
  return values[static_cast<std::size_t>(n)];
}

BigRat FiberSeries::poly_at(long long n) const {
  BigRat total = 0;
  for (int i = 0; i < dim; ++i) {
    BigRat term = BigRat(f[i] * binomial_shifted(n, dim - 1 - i));
    if (i % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

BigInt FiberSeries::poly_int(long long n) const {
  BigRat v = poly_at(n);
  if (denominator(v) != 1) throw FitUnstable("fiber polynomial value is not an integer");
  return numerator(v);
}

FiberSeries fiber_series(const MonomialIdeal& I1, const MonomialIdeal& I2, const RingSpec& spec,
                         int nmax) {
  const int d = spec.dimension;
  FiberSeries S;
  S.nmax = nmax;
  S.dim = d;
  for (int n = 0; n <= nmax; ++n) {
    MonomialIdeal I2n = I2.pow(n, d);
    ArtinQuotient numerator_q(I1.product(I2n, d), d);
    ArtinQuotient denominator_q(I2n, d);
    S.values.push_back(static_cast<long long>(numerator_q.length()) -
                       static_cast<long long>(denominator_q.length()));
  }
  if (nmax < d) throw FitUnstable("fiber fit underdetermined: nmax < dim");

  for (int s = 0; s + d + 2 <= nmax + 1; ++s) {
    // Solve the d x d system on points s..s+d-1.
    std::vector<std::vector<BigRat>> A;
    std::vector<BigRat> b;
    for (int n = s; n < s + d; ++n) {
      std::vector<BigRat> row;
      for (int i = 0; i < d; ++i) {
        BigInt base = binomial_shifted(n, d - 1 - i);
        row.emplace_back(i % 2 == 0 ? base : -base);
      }
      A.push_back(std::move(row));
      b.emplace_back(S.values[static_cast<std::size_t>(n)]);
    }
    auto sol = solve_exact(std::move(A), std::move(b));
    if (!sol) continue;
    bool integral = true;
    std::vector<BigInt> f;
    for (const BigRat& v : *sol) {
      if (denominator(v) != 1) {
        integral = false;
        break;
      }
      f.push_back(numerator(v));
    }
    if (!integral) continue;
    S.f = std::move(f);
    S.fit_from = s;
    bool valid = true;
    for (int n = s + d; n <= nmax && valid; ++n)
      valid = S.poly_int(n) == BigInt(S.values[static_cast<std::size_t>(n)]);
    if (valid) {
      S.validated = true;
      return S;
    }
    S.f.clear();
  }
  throw FitUnstable("fiber fit failed to validate");
}

FiberPolyChecks fiber_poly_identity_checks(const FiberSeries& series) {
  FiberPolyChecks checks;
  const int d = series.dim;
  checks.diffs_at_minus_one = true;
  checks.diffs_at_zero = true;
  auto P = [&](long long n) { return series.poly_at(n); };
  for (int i = 0; i < d; ++i) {
    BigRat lhs1 = delta1_rat(P, d - 1 - i, -1);
    BigRat rhs1 = BigRat((i % 2 == 0 ? 1 : -1) * series.f[static_cast<std::size_t>(i)]);
    if (lhs1 != rhs1) {
      checks.diffs_at_minus_one = false;
      checks.notes.push_back("difference at -1 fails for i=" + std::to_string(i));
    }
    BigRat lhs2 = delta1_rat(P, d - 1 - i, 0);
    BigRat rhs2 = 0;
    for (int j = 0; j <= i; ++j) {
      BigRat term = BigRat(series.f[static_cast<std::size_t>(j)]);
      rhs2 += (j % 2 == 0) ? term : -term;
    }
    if (lhs2 != rhs2) {
      checks.diffs_at_zero = false;
      checks.notes.push_back("difference at 0 fails for i=" + std::to_string(i));
    }
  }
  return checks;
}

LimitLength compute_limit_length(const RingElement& slot_element,
                                 const std::vector<RingElement>& second_block,
                                 const MonomialIdeal& I1, const MonomialIdeal& I2,
                                 const RingSpec& spec, LimitVariant variant, int nmax,
                                 const LengthEvaluator& lengths) {
  const int d = spec.dimension;
  LimitLength L;
  L.variant = variant;
  for (int n = 1; n <= nmax; ++n) {
    MonomialIdeal I2n = I2.pow(n, d);
    MonomialIdeal A = I1.product(I2n, d);
    std::vector<RingElement> den;
    for (const Monomial& g : I2n.generators()) den.push_back(slot_element.times(g));
    MonomialIdeal shifted = I1.product(I2.pow(n - 1, d), d);
    for (const RingElement& x : second_block)
      for (const Monomial& g : shifted.generators()) den.push_back(x.times(g));
    long long la = lengths(as_elements(A));
    long long lad = lengths(concat(as_elements(A), den));
    if (lad != la)
      throw ScenarioError("limit length denominator is not contained in I1 I2^n "
                          "(second ideal not inside the first?)");
    L.per_n.push_back(lengths(den) - la);
  }
  // Stable value: the last three values agree.
  const int count = static_cast<int>(L.per_n.size());
  if (count >= 3 && L.per_n[count - 1] == L.per_n[count - 2] &&
      L.per_n[count - 2] == L.per_n[count - 3]) {
    L.stable = L.per_n[count - 1];
    int s = count - 1;
    while (s > 0 && L.per_n[s - 1] == *L.stable) --s;
    L.stabilized_from = s + 1;  // per_n is 1-based in n
  }
  return L;
}

DifferenceIdentityReport difference_identities(const std::vector<long long>& f_values, int i,
                                               int j) {
  if (i < 1 || j < i) throw ScenarioError("difference identities need 1 <= i <= j");
  const int N = static_cast<int>(f_values.size()) - 1;
  auto f = [&](int n) -> long long {
    return (n >= 0 && n <= N) ? f_values[static_cast<std::size_t>(n)] : 0;
  };
  auto dj = [&](int n) { return delta1_fn(f, j, n); };

  DifferenceIdentityReport rep;
  for (int n = i - 1; n <= N + j; ++n) rep.sum_binomial += binomial_ll(n, i - 1) * dj(n);
  for (int n = i; n <= N + j; ++n) rep.sum_shifted += binomial_ll(n - 1, i - 1) * dj(n);
  const long long sign = (i % 2 == 0) ? 1 : -1;
  rep.rhs_at_minus_one = sign * delta1_fn(f, j - i, -1);
  rep.rhs_at_zero = sign * delta1_fn(f, j - i, 0);
  rep.ok = rep.sum_binomial == rep.rhs_at_minus_one && rep.sum_shifted == rep.rhs_at_zero;
  return rep;
}

}  // namespace fclab
