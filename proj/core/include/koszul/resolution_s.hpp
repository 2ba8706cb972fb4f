#pragma once

#include <vector>

#include "koszul/betti.hpp"
#include "koszul/complex.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

/// A minimal free resolution over S: P_i at position -i, length <= n.
struct SResolution {
  RingPtr ring;
  std::vector<int> p0;                          // generator degrees of P_0
  std::vector<HomogeneousMatrix> differentials;  // d_1 .. d_length
  BettiTable betti;
  int reg = kNegInfinity;

  int length() const { return static_cast<int>(differentials.size()); }
  const std::vector<int>& generatorDegrees(int i) const;
  FreeComplex complex() const;
};

/// Unit entries cancelled and redundant relations dropped; rows are then a
/// minimal generating set of the module.
HomogeneousMatrix minimalPresentation(const HomogeneousMatrix& presentation);

/// The S-module presented by the columns is coker(presentation).
SResolution minimalFreeResolutionS(const HomogeneousMatrix& presentation);

/// max{j - i : β_{i,j} ≠ 0}; kNegInfinity for the zero module.
int regS(const HomogeneousMatrix& presentation);

/// Requires a nonzero module generated in a single degree ι (InputError
/// otherwise); true iff reg = ι.
bool hasLinearResolutionS(const HomogeneousMatrix& presentation);

/// Columns forming a monomial basis of M_d (standard vectors m·e_g that
/// complement the relations in degree d).
HomogeneousMatrix pieceBasisColumns(const HomogeneousMatrix& presentation, int degree);

/// Presentation of M_⟨d⟩, the submodule generated by M_d.
HomogeneousMatrix componentPresentation(const HomogeneousMatrix& presentation, int degree);
/// Presentation of M_{≥i}.
HomogeneousMatrix truncationPresentation(const HomogeneousMatrix& presentation, int degree);

/// Every M_⟨d⟩ has a linear resolution. Degrees d from the lowest generator
/// degree to max(top generator degree, reg M) are tested; beyond that
/// M_⟨d⟩ = M_{≥d} is linear.
bool componentwiseLinearS(const HomogeneousMatrix& presentation);

/// min{i : reg(M_{≥i}) <= i}, starting from the lowest generator degree.
int truncationRegularityS(const HomogeneousMatrix& presentation);

/// Graded dimensions of H_i(lin P) for every i, in degrees up to a ceiling
/// that covers the generators of each kernel.
BettiTable linHomologyS(const SResolution& res);

struct LdValue {
  int value = kNegInfinity;
  bool certified = false;
};

/// max{i <= H : H_i(lin P) ≠ 0}; certified when H >= the resolution length.
LdValue ldS(const HomogeneousMatrix& presentation, int maxHomological);

/// Presentation of the i-th syzygy module Ω_i (Ω_0 = M).
HomogeneousMatrix syzygyPresentationS(const SResolution& res, int i);

/// inf{i : Ω_i is componentwise linear}.
int ldViaSyzygiesS(const HomogeneousMatrix& presentation);

/// The zero map into the free module with the given generator degrees,
/// i.e. a presentation of that free module.
HomogeneousMatrix freePresentation(const RingPtr& ring, std::vector<int> generatorDegrees);

}  // namespace koszul
