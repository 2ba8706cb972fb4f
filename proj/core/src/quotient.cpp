#include "koszul/quotient.hpp"

#include <algorithm>

#include "koszul/errors.hpp"
#include "koszul/graded_module.hpp"
#include "koszul/groebner.hpp"

namespace koszul {

namespace {

void requireQuotient(const GradedRing& r) {
  if (r.kind() != RingKind::Quotient) throw InputError("expected a module over a quotient algebra");
}

}  // namespace

RingPtr quotientAlgebra(const RingPtr& polynomialRing, const std::vector<RingElem>& relations, int degreeBound) {
  return GradedRing::quotient(polynomialRing, relations, degreeBound);
}

HomogeneousMatrix residueFieldPresentation(const RingPtr& ring) {
  HomogeneousMatrix p(ring, {0}, std::vector<int>(static_cast<std::size_t>(ring->numVars()), 1));
  for (int v = 0; v < ring->numVars(); ++v) p.set(0, v, RingElem::variable(ring, v));
  return p;
}

HomogeneousMatrix liftToS(const HomogeneousMatrix& presentationOverA) {
  const RingPtr& a = presentationOverA.ring();
  requireQuotient(*a);
  const RingPtr& s = a->ambient();
  HomogeneousMatrix lift = presentationOverA.overRing(s);
  for (int g = 0; g < lift.numRows(); ++g)
    for (const RingElem& rel : a->relations())
      lift.appendColumn(lift.rowDegree(g) + 2, {{g, RingElem::fromTerms(s, rel.terms())}});
  return lift;
}

int autoDegreeBound(const HomogeneousMatrix& presentationOverA, int maxHomological) {
  const int reg = regS(liftToS(presentationOverA));
  if (reg == kNegInfinity) return 0;
  return maxHomological + reg + 1;
}

TruncatedAResolution minimalResolutionA(const HomogeneousMatrix& presentationOverA, int maxHomological, int maxDegree,
                                        bool force) {
  requireQuotient(*presentationOverA.ring());
  if (maxHomological < 0) throw InputError("homological bound must be non-negative");
  const int safe = autoDegreeBound(presentationOverA, maxHomological);
  if (maxDegree < 0) {
    maxDegree = safe;
  } else if (maxDegree < safe && !force) {
    throw BoundError("degree bound " + std::to_string(maxDegree) + " is below the safe bound " +
                     std::to_string(safe) + " (use force to override)");
  }
  TruncatedAResolution out;
  out.maxHomological = maxHomological;
  out.maxDegree = maxDegree;
  const auto& rows = presentationOverA.rowDegrees();
  const int lo = rows.empty() ? 0 : *std::min_element(rows.begin(), rows.end());
  const int span = std::max(0, maxDegree - lo);
  RingPtr ring = presentationOverA.ring();
  if (ring->degreeBound() < span) ring = ring->withDegreeBound(span);
  HomogeneousMatrix pres = presentationOverA.overRing(ring);
  RingPieces pieces(ring, span);
  FiniteGradedModule m = rows.empty() ? FiniteGradedModule(ring, 0, {0}) : cokernelModule(pres, pieces, maxDegree);
  out.data = resolveDegreewise(m, pieces, maxHomological, maxDegree);
  out.betti = out.data.betti();
  return out;
}

bool koszulnessCheck(const RingPtr& algebra, int maxHomological) {
  requireQuotient(*algebra);
  if (maxHomological < 2) throw InputError("Koszulness check needs H >= 2");
  TruncatedAResolution res =
      minimalResolutionA(residueFieldPresentation(algebra), maxHomological, maxHomological, true);
  for (const auto& [key, v] : res.betti.entries())
    if (key.first <= maxHomological && key.second != key.first) return false;
  return true;
}

BettiTable linHomologyA(const TruncatedAResolution& res) {
  const auto& rows = res.data.generatorDegrees.front();
  const int lo = rows.empty() ? 0 : *std::min_element(rows.begin(), rows.end());
  RingPieces pieces(res.data.ring, std::max(0, res.maxDegree - lo));
  BettiTable out;
  const BettiTable lin = linearPartHomology(res.data, pieces);
  for (const auto& [key, v] : lin.entries())
    if (key.first < res.maxHomological && key.second <= res.maxDegree - 1) out.add(key.first, key.second, v);
  return out;
}

int ldATruncated(const HomogeneousMatrix& presentationOverA, int maxHomological, int maxDegree, bool force) {
  if (maxHomological < 1) throw InputError("ld needs H >= 1");
  TruncatedAResolution res = minimalResolutionA(presentationOverA, maxHomological, maxDegree, force);
  if (res.betti.empty()) return kNegInfinity;
  int ld = 0;
  const BettiTable lin = linHomologyA(res);
  for (const auto& [key, v] : lin.entries()) ld = std::max(ld, key.first);
  return ld;
}

AEComparison aeComparison(const HomogeneousMatrix& presentationOverA, int maxHomological, int maxDegree, bool force) {
  AEComparison out;
  out.regA = minimalResolutionA(presentationOverA, maxHomological, maxDegree, force).betti.regularity();
  out.regS = regS(liftToS(presentationOverA));
  out.holds = out.regA <= out.regS;
  return out;
}

bool aeInequalityCheck(const HomogeneousMatrix& presentationOverA, int maxHomological, int maxDegree, bool force) {
  return aeComparison(presentationOverA, maxHomological, maxDegree, force).holds;
}

bool golodCriterion(const RingPtr& algebra) {
  requireQuotient(*algebra);
  const RingPtr& s = algebra->ambient();
  HomogeneousMatrix gens(s, {0}, std::vector<int>(algebra->relations().size(), 2));
  for (std::size_t k = 0; k < algebra->relations().size(); ++k)
    gens.set(0, static_cast<int>(k), RingElem::fromTerms(s, algebra->relations()[k].terms()));
  HomogeneousMatrix ideal = minimalGenerators(gens);
  if (ideal.numCols() == 0) return true;
  return hasLinearResolutionS(kernelOfMap(ideal));
}

}  // namespace koszul
