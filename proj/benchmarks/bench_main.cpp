#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "job.hpp"
#include "koszul/bgg.hpp"
#include "koszul/exterior.hpp"
#include "koszul/groebner.hpp"
#include "koszul/quotient.hpp"
#include "koszul/resolution_s.hpp"

using namespace koszul;

namespace {

std::vector<std::string> names(const char* prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

HomogeneousMatrix cyclic(const RingPtr& ring, const std::vector<std::string>& gens) {
  HomogeneousMatrix m(ring, {0}, {});
  for (const auto& g : gens) {
    RingElem e = cli::parseElement(g, ring);
    m.appendColumn(e.degree(), {{0, e}});
  }
  return m;
}

// Consecutive products x_i x_{i+1} plus x_1^2: a cycle-like quadratic ideal.
std::vector<std::string> quadrics(int n) {
  std::vector<std::string> out{"x1^2"};
  for (int i = 1; i < n; ++i) out.push_back("x" + std::to_string(i) + "*x" + std::to_string(i + 1));
  out.push_back("x1*x" + std::to_string(n) + " + x2^2");
  return out;
}

FiniteGradedModule modSocle(int n) {
  RingPtr e = GradedRing::exterior(PrimeField(), names("y", n));
  std::string top;
  for (int i = 1; i <= n; ++i) top += (i > 1 ? "*y" : "y") + std::to_string(i);
  return realizeEModule(cyclic(e, {top}));
}

}  // namespace

static void BM_Buchberger(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RingPtr s = GradedRing::polynomial(PrimeField(), names("x", n));
  HomogeneousMatrix m = cyclic(s, quadrics(n));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(m).size());
}
BENCHMARK(BM_Buchberger)->DenseRange(3, 6);

static void BM_ResolveResidueFieldS(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RingPtr s = GradedRing::polynomial(PrimeField(), names("x", n));
  HomogeneousMatrix k = cyclic(s, names("x", n));
  for (auto _ : state) benchmark::DoNotOptimize(minimalFreeResolutionS(k).reg);
}
BENCHMARK(BM_ResolveResidueFieldS)->DenseRange(2, 6);

static void BM_ResolveQuadricsS(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RingPtr s = GradedRing::polynomial(PrimeField(), names("x", n));
  HomogeneousMatrix m = cyclic(s, quadrics(n));
  for (auto _ : state) benchmark::DoNotOptimize(minimalFreeResolutionS(m).reg);
}
BENCHMARK(BM_ResolveQuadricsS)->DenseRange(3, 5);

static void BM_ResolveResidueFieldE(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RingPtr e = GradedRing::exterior(PrimeField(), names("y", n));
  FiniteGradedModule k = realizeEModule(cyclic(e, names("y", n)));
  for (auto _ : state) benchmark::DoNotOptimize(minimalFreeResolutionE(k, 6).betti().entries().size());
}
BENCHMARK(BM_ResolveResidueFieldE)->DenseRange(2, 4);

static void BM_LdExactE(benchmark::State& state) {
  FiniteGradedModule n = modSocle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ldExactE(n));
}
BENCHMARK(BM_LdExactE)->DenseRange(2, 5);

static void BM_LdLinearPartE(benchmark::State& state) {
  FiniteGradedModule n = modSocle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ldLowerBoundE(n, 6));
}
BENCHMARK(BM_LdLinearPartE)->DenseRange(2, 4);

static void BM_BGGCohomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FiniteGradedModule whole = realizeEModule(HomogeneousMatrix(GradedRing::exterior(PrimeField(), names("y", n)), {0}, {}));
  for (auto _ : state) benchmark::DoNotOptimize(bggCohomology(bggOfEModule(whole)).size());
}
BENCHMARK(BM_BGGCohomology)->DenseRange(2, 5);

static void BM_KoszulCheckQuotient(benchmark::State& state) {
  RingPtr s = GradedRing::polynomial(PrimeField(), {"s", "t", "u", "v", "w"});
  std::vector<RingElem> rels;
  for (const char* r : {"s*t", "u*v", "s*w"}) rels.push_back(cli::parseElement(r, s));
  RingPtr a = quotientAlgebra(s, rels);
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(koszulnessCheck(a, h));
}
BENCHMARK(BM_KoszulCheckQuotient)->DenseRange(3, 5);
BENCHMARK_MAIN();
