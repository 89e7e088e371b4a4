#include <benchmark/benchmark.h>

#include <fclab/complex.hpp>
#include <fclab/hilbert.hpp>

using namespace fclab;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

RingSpec spec2() { return RingSpec(2, 32003, {"x", "y"}, 1); }

MonomialIdeal base_I2() { return MonomialIdeal::normalize({mono({2, 0}), mono({0, 2})}); }

void StandardBasis(benchmark::State& state) {
  MonomialIdeal J = MonomialIdeal::maximal(2).pow(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    ArtinQuotient q(J, 2);
    benchmark::DoNotOptimize(q.length());
  }
}
BENCHMARK(StandardBasis)->Arg(10)->Arg(25);

void ParameterColength(benchmark::State& state) {
  RingSpec spec = spec2();
  SequenceSpec S = generate_sequence(MonomialIdeal::maximal(2), 1, base_I2(), 1, spec, 1);
  for (auto _ : state) {
    LengthResult r = length_of_quotient(S.elements, spec);
    benchmark::DoNotOptimize(r.length);
  }
}
BENCHMARK(ParameterColength);

void ComplexHomology(benchmark::State& state) {
  RingSpec spec = spec2();
  auto cache = std::make_shared<PowerQuotientCache>(MonomialIdeal::maximal(2), base_I2(), spec);
  SequenceSpec S = generate_sequence(MonomialIdeal::maximal(2), 1, base_I2(), 1, spec, 1);
  ComplexBuilder b(cache, S.first_block(), S.second_block());
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BigradedComplex C = b.build(n, n);
    benchmark::DoNotOptimize(b.homology_dims(C));
  }
}
BENCHMARK(ComplexHomology)->Arg(3)->Arg(5);

void BivariateFitBench(benchmark::State& state) {
  RingSpec spec = spec2();
  HilbertTable T(MonomialIdeal::maximal(2), base_I2(), spec, {7, 7});
  for (auto _ : state) {
    BivariateFit fit = fit_bivariate(T, 2, 3);
    benchmark::DoNotOptimize(fit.validated);
  }
}
BENCHMARK(BivariateFitBench);

void SparseRank(benchmark::State& state) {
  PrimeField F(32003);
  SplitMix64 rng(9);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  GfpMatrix M(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (int t = 0; t < 4; ++t) M.add(r, rng.below(n), 1 + rng.below(F.p() - 1), F);
  for (auto _ : state) {
    RankProfile p = rank_profile(M, F);
    benchmark::DoNotOptimize(p.rank);
  }
}
BENCHMARK(SparseRank)->Arg(200)->Arg(500);

}  // namespace
