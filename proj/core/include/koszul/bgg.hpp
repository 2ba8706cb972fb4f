#pragma once

#include <vector>

#include "koszul/complex.hpp"
#include "koszul/graded_module.hpp"
#include "koszul/resolution_s.hpp"

namespace koszul {

/// The Koszul dual of S or E: the other algebra on the same number of
/// variables (x1..xn for S, y1..yn for E).
RingPtr koszulDualRing(const GradedRing& ring);

/// S-complex of an E-module N: the term at position p is S ⊗ (N_{-p})*
/// with generators in degree -p, and the entry at (row l, column k) is
/// (-1)^p Σ_λ A_λ(k, l) x_λ where A_λ : N_{-p-1} -> N_{-p} is y_λ.
FreeComplex bggOfEModule(const FiniteGradedModule& n, const RingPtr& polynomialRing);
FreeComplex bggOfEModule(const FiniteGradedModule& n);

/// E-complex of an S-module M = coker(presentation), for the degrees of M in
/// [windowLo, windowHi]: term p is E ⊗ (M_{-p})*. Only cohomology at
/// positions whose neighbours are in the window is meaningful.
FreeComplex bggOfSModule(const HomogeneousMatrix& presentation, int windowLo, int windowHi,
                         const RingPtr& exteriorRing);

struct CohomologyModule {
  int position = 0;
  /// Minimal presentation; no rows for the zero module.
  HomogeneousMatrix presentation;
  bool isZero() const { return presentation.numRows() == 0; }
};

/// H^p of a complex of free S-modules for every position, minimally presented.
std::vector<CohomologyModule> bggCohomology(const FreeComplex& c);

/// H^p of a complex of free E-modules as a finite graded module.
FiniteGradedModule cohomologyModuleE(const FreeComplex& c, int position);

/// -min{p : H^p(BGG(N)) ≠ 0}; kNegInfinity for the zero module.
int regEViaBGG(const FiniteGradedModule& n);

/// sup_p reg_S(H^p(BGG(N))) + p; kNegInfinity for the zero module.
int ldExactE(const FiniteGradedModule& n);

/// β_{i,j}(N) = dim H^{i-j}(BGG(N))_j for all i <= H and all j.
bool bettiVsKoszulCheck(const FiniteGradedModule& n, int maxHomological);

/// ld_S(M) = sup_p reg_E(H^p(BGG(M))) + p over the window [a - 1, reg M + 2],
/// a the lowest generator degree.
int ldSViaBGG(const HomogeneousMatrix& presentation);

}  // namespace koszul
