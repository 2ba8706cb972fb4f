#include <doctest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "koszul/errors.hpp"
#include "koszul/groebner.hpp"
#include "koszul/resolution_s.hpp"
#include "oracles.hpp"

using namespace koszul;
using namespace koszul::testing;

namespace {

std::vector<HomogeneousMatrix> corpus(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<HomogeneousMatrix> out;
  while (static_cast<int>(out.size()) < count) {
    RingPtr s = polyRing(rng.uniform(2, 3));
    HomogeneousMatrix p = randomPresentation(rng, s, 2, 3, 2);
    if (minimalPresentation(p).numRows() == 0) continue;
    out.push_back(p);
  }
  return out;
}

HomogeneousMatrix residueField(int n) {
  RingPtr s = polyRing(n);
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  return cyclic(s, vars);
}

long binomial(int n, int k) {
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

TEST_CASE("resolutions of small modules") {
  RingPtr s = polyRing(2);
  SResolution free = minimalFreeResolutionS(freePresentation(s, {0}));
  CHECK(free.length() == 0);
  CHECK(free.betti.entries().size() == 1);
  CHECK(free.betti.at(0, 0) == 1);

  SResolution k = minimalFreeResolutionS(residueField(3));
  for (int i = 0; i <= 3; ++i) CHECK(k.betti.at(i, i) == binomial(3, i));
  CHECK(k.reg == 0);

  SResolution m = minimalFreeResolutionS(cyclic(s, {"x1^2", "x1*x2"}));
  CHECK(m.betti.at(0, 0) == 1);
  CHECK(m.betti.at(1, 2) == 2);
  CHECK(m.betti.at(2, 3) == 1);
  CHECK(m.betti.entries().size() == 3);
  CHECK(m.reg == 1);
  CHECK(checkComplex(m.complex()));
  CHECK(isMinimal(m.complex()));
}

TEST_CASE("regS") {
  RingPtr s = polyRing(2);
  CHECK(regS(freePresentation(s, {3})) == 3);
  CHECK(regS(residueField(2)) == 0);
  CHECK(regS(cyclic(s, {"x1^2", "x1*x2", "x2^2"})) == 1);
  CHECK(regS(HomogeneousMatrix(s, {}, {})) == kNegInfinity);
}

TEST_CASE("hasLinearResolutionS") {
  RingPtr s = polyRing(3);
  CHECK(hasLinearResolutionS(submodulePresentation(cyclic(s, {"x1", "x2", "x3"}))));
  RingPtr s2 = polyRing(2);
  CHECK_FALSE(hasLinearResolutionS(submodulePresentation(cyclic(s2, {"x1^2", "x2^2"}))));
  CHECK(hasLinearResolutionS(freePresentation(s2, {3})));
  CHECK_THROWS_AS(hasLinearResolutionS(freePresentation(s2, {0, 1})), InputError);
}

TEST_CASE("componentwise linearity and truncation regularity") {
  RingPtr s = polyRing(2);
  CHECK(componentwiseLinearS(submodulePresentation(cyclic(s, {"x1", "x2"}))));
  CHECK(componentwiseLinearS(freePresentation(s, {0, 1})));
  HomogeneousMatrix m = cyclic(s, {"x1^2", "x1*x2"});
  CHECK(componentwiseLinearS(m) == (ldS(m, 2).value == 0));
  CHECK(truncationRegularityS(residueField(2)) == 0);
  CHECK(truncationRegularityS(freePresentation(s, {2})) == 2);
  CHECK(truncationRegularityS(m) == 1);
}

TEST_CASE("ldS examples") {
  RingPtr s = polyRing(2);
  CHECK(ldS(freePresentation(s, {0, 2}), 2).value == 0);
  CHECK(ldS(residueField(3), 3).value == 0);
  HomogeneousMatrix m = cyclic(s, {"x1^2", "x1*x2"});
  LdValue v = ldS(m, 2);
  CHECK(v.certified);
  CHECK(v.value == ldViaSyzygiesS(m));
  CHECK(v.value == 1);
  CHECK_FALSE(ldS(cyclic(s, {"x1^2", "x2^2"}), 1).certified);
}

TEST_CASE("Betti numbers agree with Koszul homology") {
  for (const auto& p : corpus(101, 20)) {
    SResolution res = minimalFreeResolutionS(p);
    const int n = p.ring()->numVars();
    const int lo = *std::min_element(res.p0.begin(), res.p0.end());
    QuotientModel model(p, res.reg + 2);
    for (int i = 0; i <= n; ++i)
      for (int j = lo + i - 1; j <= res.reg + i + 1; ++j) CHECK(res.betti.at(i, j) == bettiViaKoszul(model, i, j));
  }
}

TEST_CASE("Betti numbers are consistent with the Hilbert function") {
  for (const auto& p : corpus(103, 25)) {
    SResolution res = minimalFreeResolutionS(p);
    const RingPtr& s = p.ring();
    for (int d = 0; d <= 10; ++d) {
      long alternating = 0;
      for (const auto& [key, b] : res.betti.entries())
        alternating += (key.first % 2 == 0 ? 1 : -1) * b * static_cast<long>(s->pieceDim(d - key.second));
      CHECK(alternating == hilbertFunction(p, d));
    }
  }
}

TEST_CASE("regularity of a short exact sequence 0 -> K -> F -> M -> 0") {
  for (const auto& p : corpus(107, 25)) {
    HomogeneousMatrix m = minimalPresentation(p);
    const int regF = *std::max_element(m.rowDegrees().begin(), m.rowDegrees().end());
    const int regM = regS(m);
    if (m.numCols() == 0) continue;
    const int regK = regS(submodulePresentation(m));
    CHECK(regF <= std::max(regK, regM));
    if (regK != regM + 1) CHECK(regF == std::max(regK, regM));
  }
}

TEST_CASE("finite length modules are bounded by their top degree") {
  Rng rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    RingPtr s = polyRing(rng.uniform(2, 3));
    HomogeneousMatrix p = randomPresentation(rng, s, 2, 2, 2);
    const int k = rng.uniform(2, 3);
    for (int g = 0; g < p.numRows(); ++g)
      for (const Monomial& mono : s->pieceBasis(k)) p.appendColumn(p.rowDegree(g) + k, {{g, RingElem::fromTerms(s, {{mono, 1}})}});
    int top = kNegInfinity;
    for (int d = 0; d <= 8; ++d)
      if (hilbertFunction(p, d) > 0) top = d;
    CHECK(regS(p) <= top);
  }
}

TEST_CASE("componentwise linear iff ld = 0, and truncation regularity equals reg") {
  for (const auto& p : corpus(113, 25)) {
    const int n = p.ring()->numVars();
    const LdValue ld = ldS(p, n);
    REQUIRE(ld.certified);
    CHECK(componentwiseLinearS(p) == (ld.value == 0));
    CHECK(truncationRegularityS(p) == regS(p));
    CHECK(ldViaSyzygiesS(p) == ld.value);
  }
}

TEST_CASE("submodules generated in degree one have reg below c^{n!} 2^{(n-1)!}") {
  Rng rng(127);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform(2, 3);
    const int c = rng.uniform(1, 4);
    RingPtr s = polyRing(n);
    HomogeneousMatrix m = randomLinearSubmodule(rng, s, c, rng.uniform(1, 4));
    CHECK(static_cast<long double>(regS(m)) < blBound(c, n, 1));
  }
}
