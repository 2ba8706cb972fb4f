#include <doctest.h>

#include "generators.hpp"
#include "helpers.hpp"
#include "koszul/errors.hpp"
#include "koszul/quotient.hpp"
#include "koszul/resolution_s.hpp"
#include "oracles.hpp"

using namespace koszul;
using namespace koszul::testing;

namespace {

RingPtr algebra(const std::vector<std::string>& vars, const std::vector<std::string>& rels, int bound = 8) {
  RingPtr s = GradedRing::polynomial(PrimeField(), vars);
  std::vector<RingElem> r;
  for (const auto& t : rels) r.push_back(el(s, t));
  return quotientAlgebra(s, r, bound);
}

RingPtr exampleAlgebra(int bound = 8) { return algebra({"s", "t", "u", "v", "w"}, {"s*t", "u*v", "s*w"}, bound); }

}  // namespace

TEST_CASE("Koszulness of small algebras") {
  RingPtr a = algebra({"x"}, {"x^2"});
  CHECK(koszulnessCheck(a, 6));
  TruncatedAResolution ka = minimalResolutionA(residueFieldPresentation(a), 6);
  for (int i = 0; i <= 6; ++i) CHECK(ka.betti.at(i, i) == 1);

  RingPtr b = algebra({"x", "y"}, {"x*y"});
  CHECK(koszulnessCheck(b, 6));
  TruncatedAResolution kb = minimalResolutionA(residueFieldPresentation(b), 6);
  CHECK(kb.betti.at(0, 0) == 1);
  for (int i = 1; i <= 6; ++i) CHECK(kb.betti.at(i, i) == 2);
  CHECK(kb.betti.isLinear());

  CHECK(koszulnessCheck(exampleAlgebra(), 5));
}

TEST_CASE("resolutions over quotient algebras") {
  RingPtr ci = algebra({"x", "y"}, {"x^2", "y^2"});
  TruncatedAResolution free = minimalResolutionA(HomogeneousMatrix(ci, {0}, {}), 4);
  CHECK(free.betti.entries().size() == 1);
  CHECK(free.betti.at(0, 0) == 1);

  TruncatedAResolution k = minimalResolutionA(residueFieldPresentation(ci), 5);
  for (int i = 0; i <= 5; ++i) CHECK(k.betti.at(i, i) == i + 1);
  CHECK(k.betti.isLinear());
}

TEST_CASE("degree bounds") {
  RingPtr ci = algebra({"x", "y"}, {"x^2", "y^2"});
  HomogeneousMatrix m = cyclic(ci, {"x*y"});
  const int d = autoDegreeBound(m, 4);
  CHECK(d == 4 + regS(liftToS(m)) + 1);
  CHECK_THROWS_AS(minimalResolutionA(m, 4, d - 1), BoundError);
  CHECK_NOTHROW(minimalResolutionA(m, 4, d - 1, true));
  CHECK(minimalResolutionA(m, 4).maxDegree == d);
}

TEST_CASE("graded pieces of A match the Hilbert function of its S-resolution") {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> algebras = {
      {{"x", "y"}, {"x^2", "y^2"}},
      {{"x", "y"}, {"x*y"}},
      {{"x", "y", "z"}, {"x^2 + y*z", "x*y"}},
      {{"s", "t", "u", "v", "w"}, {"s*t", "u*v", "s*w"}}};
  for (const auto& [vars, rels] : algebras) {
    RingPtr a = algebra(vars, rels, 10);
    RingPtr s = a->ambient();
    SResolution res = minimalFreeResolutionS(cyclic(s, rels));
    for (int d = 0; d <= 10; ++d) {
      long alternating = 0;
      for (const auto& [key, b] : res.betti.entries())
        alternating += (key.first % 2 == 0 ? 1 : -1) * b * static_cast<long>(s->pieceDim(d - key.second));
      CHECK(a->pieceDim(d) == alternating);
    }
  }
}

TEST_CASE("over Koszul algebras Betti numbers stay below the S-regularity strand") {
  Rng rng(401);
  std::vector<RingPtr> algebras = {algebra({"x", "y"}, {"x^2", "y^2"}), algebra({"x", "y"}, {"x*y"}),
                                   algebra({"x", "y", "z"}, {"x^2", "y*z"})};
  for (const auto& a : algebras) {
    for (int trial = 0; trial < 6; ++trial) {
      HomogeneousMatrix m = randomPresentation(rng, a, 2, 2, 2);
      const int reg = regS(liftToS(m));
      if (reg == kNegInfinity) continue;
      TruncatedAResolution res = minimalResolutionA(m, 4);
      for (const auto& [key, b] : res.betti.entries()) CHECK(key.second - key.first <= reg);
    }
  }
}

TEST_CASE("ldATruncated") {
  RingPtr b = algebra({"x", "y"}, {"x*y"});
  CHECK(ldATruncated(residueFieldPresentation(b), 5) == 0);

  RingPtr ci = algebra({"x", "y"}, {"x^2", "y^2"});
  HomogeneousMatrix m = cyclic(ci, {"x*y"});
  int previous = -1;
  std::vector<int> values;
  for (int h = 4; h <= 8; ++h) {
    const int v = ldATruncated(m, h);
    CHECK(v >= previous);
    previous = v;
    values.push_back(v);
  }
  CHECK(values[values.size() - 1] == values[values.size() - 2]);
}

TEST_CASE("reg over A against reg over S, and the 2-linear ideal predicate") {
  RingPtr ci = algebra({"x", "y"}, {"x^2", "y^2"});
  AEComparison c = aeComparison(cyclic(ci, {"x*y"}), 4);
  CHECK(c.holds);
  CHECK(c.regA <= c.regS);
  CHECK(aeInequalityCheck(residueFieldPresentation(exampleAlgebra()), 4));

  CHECK_FALSE(golodCriterion(ci));
  CHECK(golodCriterion(algebra({"x", "y"}, {"x*y"})));
  CHECK_FALSE(golodCriterion(exampleAlgebra()));
}
