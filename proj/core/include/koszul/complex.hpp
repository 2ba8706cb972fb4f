#pragma once

#include <vector>

#include "koszul/matrix.hpp"

namespace koszul {

/// A bounded complex of graded free modules in cohomological indexing: the
/// term at position p has generators in degrees termDegrees(p) and the map
/// from position p goes to position p+1.
class FreeComplex {
 public:
  FreeComplex() = default;
  /// Terms are taken from the maps; throws InputError if consecutive maps are
  /// not composable. `terms` may be given to fix terms where no map exists.
  FreeComplex(RingPtr ring, int start, std::vector<std::vector<int>> terms, std::vector<HomogeneousMatrix> maps);

  /// Homological resolution P_len -> ... -> P_0: differentials[i-1] = d_i.
  /// P_i sits at position -i.
  static FreeComplex fromResolution(RingPtr ring, std::vector<int> p0Degrees, std::vector<HomogeneousMatrix> differentials);

  const RingPtr& ring() const { return ring_; }
  int start() const { return start_; }
  /// Last position holding a term.
  int stop() const { return start_ + static_cast<int>(terms_.size()) - 1; }
  int numTerms() const { return static_cast<int>(terms_.size()); }

  /// Generator degrees at a position (empty outside the complex).
  const std::vector<int>& term(int position) const;
  /// Map position -> position+1 (a zero matrix when either side is absent).
  HomogeneousMatrix mapFrom(int position) const;

  /// Homological view: P_i = term(-i), d_i = mapFrom(-i).
  const std::vector<int>& homologicalTerm(int i) const { return term(-i); }
  HomogeneousMatrix differential(int i) const { return mapFrom(-i); }

 private:
  RingPtr ring_;
  int start_ = 0;
  std::vector<std::vector<int>> terms_;
  std::vector<HomogeneousMatrix> maps_;  // maps_[k]: start+k -> start+k+1
};

/// True iff every composite of consecutive maps vanishes. Throws InputError if
/// degrees are incompatible.
bool checkComplex(const FreeComplex& c);

/// Erase every entry of degree >= 2.
FreeComplex linPart(const FreeComplex& c);

/// Cancel all degree-0 (unit) entries by Gaussian elimination. The result is
/// homotopy equivalent to the input and has no degree-0 entries.
FreeComplex minimalize(const FreeComplex& c);

/// True iff no map has a nonzero entry of degree 0.
bool isMinimal(const FreeComplex& c);

/// dim_K of the degree-j piece of the cohomology at a position, by dense
/// ranks. The pieces must cover degree - min generator degree.
int homologyDim(const FreeComplex& c, const RingPieces& pieces, int position, int degree);

}  // namespace koszul
