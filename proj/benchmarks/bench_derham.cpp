#include <random>

#include <benchmark/benchmark.h>

#include "derham/charpoly.hpp"
#include "derham/cohomology.hpp"
#include "derham/ideal.hpp"

using namespace derham;

namespace {

PolyMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  PolyMatrix a(n, n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly p(2);
      p.add_term(Monomial{1, 0}, coeff(rng));
      p.add_term(Monomial{0, 1}, coeff(rng));
      p.add_term(Monomial{0, 0}, coeff(rng));
      a(i, j) = p;
    }
  return a;
}

void BM_Berkowitz(benchmark::State& state) {
  PolyMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(berkowitz_charpoly(a));
}
BENCHMARK(BM_Berkowitz)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_MulmuleyRank(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  PolyMatrix a(n, n + 1, 0);
  std::mt19937_64 rng(2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= n; ++j) a(i, j) = Poly(0, Rational(static_cast<int>(rng() % 7) - 3));
  for (auto _ : state) benchmark::DoNotOptimize(rank_from_mulmuley(mulmuley_rank_poly(a)));
}
BENCHMARK(BM_MulmuleyRank)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

// Macaulay slice of the Fermat cubic and its tangent-test companions.
void BM_GeneratedSlice(benchmark::State& state) {
  std::vector<Poly> gens{parse_poly("X0^3 + X1^3 + X2^3", 3), parse_poly("X0^2*X1 - X2^3", 3)};
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(IdealSlice::generated(gens, 3, k).dim());
}
BENCHMARK(BM_GeneratedSlice)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

void BM_ProjectiveEmptiness(benchmark::State& state) {
  std::vector<Poly> gens{parse_poly("X0*X2 - X1^2", 3), parse_poly("X1", 3), parse_poly("X0 + X2", 3)};
  for (auto _ : state) benchmark::DoNotOptimize(projective_emptiness(gens, 3));
}
BENCHMARK(BM_ProjectiveEmptiness)->Unit(benchmark::kMicrosecond);

void BM_ConicBetti(benchmark::State& state) {
  Variety conic{2, {parse_poly("X0*X2 - X1^2", 3)}};
  BettiOptions opts;
  opts.representatives = false;
  for (auto _ : state) benchmark::DoNotOptimize(betti(conic, opts).result.betti);
}
BENCHMARK(BM_ConicBetti)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
