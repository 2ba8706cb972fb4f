#pragma once

#include <vector>

#include "koszul/betti.hpp"
#include "koszul/complex.hpp"
#include "koszul/graded_module.hpp"
#include "koszul/pieces.hpp"

namespace koszul {

/// Minimal free resolution of a finite graded module computed one graded
/// piece at a time: minimal generators are a complement of (mN)_j in N_j and
/// the next module is the kernel of F -> N. Internal degrees above
/// `maxDegree` are ignored, so over infinite rings the result is exact only
/// for j <= maxDegree.
struct DegreewiseResolution {
  RingPtr ring;
  /// generatorDegrees[i]: degrees of the generators of F_i, i = 0..length.
  std::vector<std::vector<int>> generatorDegrees;
  /// differentials[i-1] = d_i : F_i -> F_{i-1}.
  std::vector<HomogeneousMatrix> differentials;
  /// syzygies[i] = Ω_i (Ω_0 = N), each a submodule of F_{i-1} in its own basis.
  std::vector<FiniteGradedModule> syzygies;
  /// True when some Ω_i vanished, i.e. the resolution is finite and complete.
  bool terminated = false;
  int maxHomological = 0;
  int maxDegree = 0;

  int length() const { return static_cast<int>(generatorDegrees.size()) - 1; }
  FreeComplex complex() const;
  BettiTable betti() const;
};

/// Resolve through homological degree H. `pieces` must cover degrees up to
/// maxDegree - N.lo() (over E the whole algebra suffices).
DegreewiseResolution resolveDegreewise(const FiniteGradedModule& n, const RingPieces& pieces, int maxHomological,
                                       int maxDegree);

/// Graded dimensions of H_i(lin P) for 0 <= i < H, degrees <= maxDegree,
/// as a Betti-style table keyed (i, j).
BettiTable linearPartHomology(const DegreewiseResolution& res, const RingPieces& pieces);

}  // namespace koszul
