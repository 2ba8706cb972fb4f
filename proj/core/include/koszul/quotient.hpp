#pragma once

#include "koszul/betti.hpp"
#include "koszul/degreewise.hpp"
#include "koszul/matrix.hpp"
#include "koszul/resolution_s.hpp"

namespace koszul {

/// A = S/I for degree-2 relations, with normal forms up to `degreeBound`.
RingPtr quotientAlgebra(const RingPtr& polynomialRing, const std::vector<RingElem>& relations, int degreeBound = 8);

/// The S-module with the same generators: entries read over S, plus f·e_g
/// for every relation f and generator g.
HomogeneousMatrix liftToS(const HomogeneousMatrix& presentationOverA);

/// H + reg_S(lift) + 1.
int autoDegreeBound(const HomogeneousMatrix& presentationOverA, int maxHomological);

struct TruncatedAResolution {
  DegreewiseResolution data;
  BettiTable betti;  // exact for i <= H and j <= D
  int maxHomological = 0;
  int maxDegree = 0;
};

/// Minimal resolution over A through step H in internal degrees <= D.
/// D < 0 selects autoDegreeBound. A D below the automatic bound raises
/// BoundError unless `force` is set.
TruncatedAResolution minimalResolutionA(const HomogeneousMatrix& presentationOverA, int maxHomological,
                                        int maxDegree = -1, bool force = false);

/// The residue field has diagonal Betti numbers through step H, internal
/// degrees <= H.
bool koszulnessCheck(const RingPtr& algebra, int maxHomological);

/// Graded dims of H_i(lin P) for i < H and degrees <= D - 1.
BettiTable linHomologyA(const TruncatedAResolution& res);

/// Largest i < H with H_i(lin P) ≠ 0 in degrees <= D - 1.
int ldATruncated(const HomogeneousMatrix& presentationOverA, int maxHomological, int maxDegree = -1,
                 bool force = false);

struct AEComparison {
  int regA = kNegInfinity;  // max{j - i} over the truncated table
  int regS = kNegInfinity;
  bool holds = false;
};
AEComparison aeComparison(const HomogeneousMatrix& presentationOverA, int maxHomological, int maxDegree = -1,
                          bool force = false);
bool aeInequalityCheck(const HomogeneousMatrix& presentationOverA, int maxHomological, int maxDegree = -1,
                       bool force = false);

/// I has a 2-linear resolution over S.
bool golodCriterion(const RingPtr& algebra);

/// Presentation of the residue field over any ring: rows {0}, columns the variables.
HomogeneousMatrix residueFieldPresentation(const RingPtr& ring);

}  // namespace koszul
