#pragma once

#include "koszul/betti.hpp"
#include "koszul/degreewise.hpp"
#include "koszul/graded_module.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

/// Default homological truncation over E: 2n + 4.
inline int defaultTruncationE(int numVars) { return 2 * numVars + 4; }

/// coker(presentation) over E, in degrees [min row degree, max row degree + n].
FiniteGradedModule realizeEModule(const HomogeneousMatrix& presentation);

/// Minimal free resolution over E through homological degree H.
DegreewiseResolution minimalFreeResolutionE(const FiniteGradedModule& n, int maxHomological);

/// dim H_i(lin P)_j for 0 <= i < H (i = H is left out: its boundary is not
/// computed).
BettiTable linHomologyE(const FiniteGradedModule& n, int maxHomological);

/// Largest i < H with H_i(lin P) ≠ 0; kNegInfinity for the zero module.
int ldLowerBoundE(const FiniteGradedModule& n, int maxHomological);

/// Ω_i(N), the i-th syzygy module (Ω_0 = N).
FiniteGradedModule syzygyE(const FiniteGradedModule& n, int i);
/// Ω_{-i}(N) = (Ω_i(N*))*, i >= 1.
FiniteGradedModule cosyzygy(const FiniteGradedModule& n, int i);

/// Every N_⟨d⟩ with N_d ≠ 0 has regularity d (computed through BGG).
bool componentwiseLinearE(const FiniteGradedModule& n);

/// inf{i <= H : Ω_i(N) componentwise linear}; -1 if none within H.
int ldViaSyzygiesE(const FiniteGradedModule& n, int maxHomological);

struct StabilizedRegularity {
  int value = kNegInfinity;
  /// Homological index at which the computation stopped.
  int steps = 0;
  /// True if the resolution ended, reached the top degree of N, or showed
  /// the same strand j - i in three consecutive steps.
  bool stabilized = false;
};

/// reg_E(N) read from a truncated resolution as max{j - i}, stopping at the
/// first step where the value is known to be final or has stabilized.
StabilizedRegularity directRegE(const FiniteGradedModule& n, int maxHomological);

}  // namespace koszul
