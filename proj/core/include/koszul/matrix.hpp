#pragma once

#include <vector>

#include "koszul/dense.hpp"
#include "koszul/pieces.hpp"
#include "koszul/ring.hpp"

namespace koszul {

/// A map of graded free modules ⊕ R(-colDeg[c]) -> ⊕ R(-rowDeg[r]), stored
/// column-sparse. Column c is the image of the c-th source generator; entry
/// (r, c) is zero or homogeneous of degree colDeg[c] - rowDeg[r].
///
/// Modules are left modules, so for maps a: F -> G and b: G -> H the
/// composite b∘a has entries Σ_s a(s,c) * b(t,s) (left factor from a).
class HomogeneousMatrix {
 public:
  struct Entry {
    int row;
    RingElem value;
  };
  using Column = std::vector<Entry>;  // sorted by row, no zero values

  HomogeneousMatrix() = default;
  HomogeneousMatrix(RingPtr ring, std::vector<int> rowDegrees, std::vector<int> colDegrees);

  const RingPtr& ring() const { return ring_; }
  int numRows() const { return static_cast<int>(rowDegs_.size()); }
  int numCols() const { return static_cast<int>(colDegs_.size()); }
  const std::vector<int>& rowDegrees() const { return rowDegs_; }
  const std::vector<int>& colDegrees() const { return colDegs_; }
  int rowDegree(int r) const { return rowDegs_[static_cast<std::size_t>(r)]; }
  int colDegree(int c) const { return colDegs_[static_cast<std::size_t>(c)]; }

  const Column& column(int c) const { return cols_[static_cast<std::size_t>(c)]; }
  RingElem entry(int r, int c) const;
  /// Throws InputError if the value is not homogeneous of degree colDeg - rowDeg.
  void set(int r, int c, const RingElem& value);
  /// Replaces column c; entries are validated as in set().
  void setColumn(int c, Column column);
  void appendColumn(int degree, Column column);

  bool isZero() const;

  /// Submatrix keeping the listed rows and columns (in the given order).
  HomogeneousMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
  /// Same entries read over a structurally compatible ring (e.g. a quotient
  /// with a larger degree bound, or the ambient ring of a quotient).
  HomogeneousMatrix overRing(const RingPtr& ring) const;

  /// Dense matrix of the degree-j piece: source basis (column c, basis
  /// monomial m of R_{j-colDeg c}) in column order, target likewise.
  DenseMatrix piece(const RingPieces& pieces, int degree) const;

  friend bool operator==(const HomogeneousMatrix& a, const HomogeneousMatrix& b);

 private:
  RingPtr ring_;
  std::vector<int> rowDegs_;
  std::vector<int> colDegs_;
  std::vector<Column> cols_;
};

/// after ∘ before. Throws InputError if degrees are not composable.
HomogeneousMatrix compose(const HomogeneousMatrix& after, const HomogeneousMatrix& before);

/// Offsets of each generator's block inside the degree-j piece of a free
/// module with the given generator degrees; back() is the total dimension.
std::vector<int> pieceOffsets(const RingPieces& pieces, const std::vector<int>& generatorDegrees, int degree);

}  // namespace koszul
