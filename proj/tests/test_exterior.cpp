#include <doctest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "koszul/bgg.hpp"
#include "koszul/exterior.hpp"
#include "oracles.hpp"

using namespace koszul;
using namespace koszul::testing;

namespace {

FiniteGradedModule residueE(int n) {
  RingPtr e = extRing(n);
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
  return realizeEModule(cyclic(e, vars));
}

FiniteGradedModule wholeE(int n) { return realizeEModule(HomogeneousMatrix(extRing(n), {0}, {})); }

FiniteGradedModule modSocle(int n) {
  RingPtr e = extRing(n);
  std::string top;
  for (int i = 1; i <= n; ++i) top += (i > 1 ? "*y" : "y") + std::to_string(i);
  return realizeEModule(cyclic(e, {top}));
}

std::vector<FiniteGradedModule> corpus(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<FiniteGradedModule> out;
  for (int k = 0; k < count; ++k) out.push_back(randomEModule(rng, rng.uniform(1, 3)));
  return out;
}

long binomial(int n, int k) {
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

TEST_CASE("realizeEModule") {
  FiniteGradedModule e = wholeE(3);
  for (int d = 0; d <= 3; ++d) CHECK(e.dim(d) == binomial(3, d));
  FiniteGradedModule k = residueE(3);
  CHECK(k.totalDim() == 1);
  CHECK(k.dim(0) == 1);
  FiniteGradedModule q = realizeEModule(cyclic(extRing(2), {"y1"}));
  CHECK(q.dim(0) == 1);
  CHECK(q.dim(1) == 1);
  CHECK(q.dim(2) == 0);
}

TEST_CASE("resolutions over E") {
  BettiTable k = minimalFreeResolutionE(residueE(2), 4).betti();
  for (int i = 0; i <= 4; ++i) CHECK(k.at(i, i) == i + 1);
  CHECK(k.isLinear());

  DegreewiseResolution e = minimalFreeResolutionE(wholeE(2), 4);
  CHECK(e.terminated);
  CHECK(e.betti().entries().size() == 1);
  CHECK(e.betti().at(0, 0) == 1);

  BettiTable q = minimalFreeResolutionE(realizeEModule(cyclic(extRing(2), {"y1"})), 4).betti();
  for (int i = 0; i <= 4; ++i) CHECK(q.at(i, i) == 1);
  CHECK(q.entries().size() == 5);
}

TEST_CASE("linear part homology and ld lower bounds") {
  BettiTable k = linHomologyE(residueE(2), 5);
  CHECK(k.at(0, 0) == 1);
  CHECK(k.entries().size() == 1);
  CHECK(ldLowerBoundE(residueE(2), 5) == 0);

  BettiTable soc = linHomologyE(modSocle(2), 6);
  bool higher = false;
  for (const auto& [key, v] : soc.entries()) higher = higher || (key.first >= 1 && v > 0);
  CHECK(higher);
  CHECK(ldLowerBoundE(modSocle(2), 6) >= 1);

  BettiTable q = linHomologyE(realizeEModule(cyclic(extRing(2), {"y1"})), 6);
  for (const auto& [key, v] : q.entries()) CHECK(key.first == 0);
}

TEST_CASE("socle, dual and cosyzygies") {
  FiniteGradedModule s = socle(wholeE(3));
  CHECK(s.totalDim() == 1);
  CHECK(s.dim(3) == 1);

  Rng rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    FiniteGradedModule n = randomEModule(rng, rng.uniform(1, 3));
    FiniteGradedModule dd = dualModule(dualModule(n));
    CHECK(sameShape(dd, n));
    CHECK(dualModule(n).satisfiesRelations());
  }

  for (int i = 1; i <= 2; ++i) CHECK(ldLowerBoundE(cosyzygy(modSocle(2), i), 8) > i);
}

TEST_CASE("componentwiseLinearE") {
  CHECK(componentwiseLinearE(residueE(2)));
  // K ⊕ K(-1) ⊕ K(-2) over n = 2, zero action.
  FiniteGradedModule sum(extRing(2), 0, {1, 1, 1});
  CHECK(sum.satisfiesRelations());
  CHECK(componentwiseLinearE(sum));
  CHECK_FALSE(componentwiseLinearE(modSocle(2)));
}

TEST_CASE("realized modules satisfy the exterior relations") {
  for (const auto& n : corpus(201, 30)) CHECK(n.satisfiesRelations());
}

TEST_CASE("E-resolutions are exact in every degree") {
  for (const auto& n : corpus(203, 15)) {
    DegreewiseResolution res = minimalFreeResolutionE(n, 5);
    const int top = n.topDegree() + 6;
    if (res.differentials.empty()) continue;
    for (int j = n.bottomDegree(); j <= top; ++j) CHECK(hilbertFunction(res.differentials.front(), j) == n.dim(j));
    for (std::size_t i = 1; i < res.differentials.size(); ++i)
      for (int j = n.bottomDegree(); j <= top; ++j)
        CHECK(kernelDim(res.differentials[i - 1], j) == spanDim(res.differentials[i], j));
  }
}

TEST_CASE("Betti numbers over E agree with the Cartan complex") {
  for (const auto& n : corpus(205, 20)) {
    BettiTable direct = minimalFreeResolutionE(n, 5).betti();
    BettiTable cartan = cartanBettiTable(n, 5);
    CHECK(direct.entries() == cartan.entries());
  }
}

TEST_CASE("E is Koszul") {
  for (int n = 1; n <= 4; ++n) {
    BettiTable k = minimalFreeResolutionE(residueE(n), n <= 3 ? 8 : 6).betti();
    CHECK(k.isLinear());
    for (const auto& [key, v] : k.entries()) CHECK(v == binomial(n + key.first - 1, key.first));
  }
}

TEST_CASE("ld over E: componentwise linearity, syzygies and the global bound") {
  for (const auto& n : corpus(207, 25)) {
    const int exact = ldExactE(n);
    const int h = exact + 2;
    CHECK(ldLowerBoundE(n, h) == exact);
    CHECK(componentwiseLinearE(n) == (exact == 0));
    CHECK(ldViaSyzygiesE(n, h) == exact);
    CHECK(static_cast<long double>(exact) <= blBound(n.maxPieceDim(), n.numVars(), 1));
  }
}

TEST_CASE("monomial quotients have ld at most max(n - 2, 1)") {
  for (int n = 2; n <= 3; ++n) {
    RingPtr e = extRing(n);
    for (const auto& ideal : allSquarefreeMonomialIdeals(n)) {
      FiniteGradedModule q = realizeEModule(monomialQuotient(e, ideal));
      if (q.isZero()) continue;
      CHECK(ldExactE(q) <= std::max(n - 2, 1));
    }
  }
}

TEST_CASE("direct regularity stabilizes at the BGG value") {
  for (const auto& n : corpus(211, 20)) {
    StabilizedRegularity d = directRegE(n, 8);
    CHECK(d.stabilized);
    CHECK(d.value == regEViaBGG(n));
  }
}
