#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

using Vec = std::vector<Coeff>;

/// Row-major dense matrix over GF(p). Maps column vectors: rows = target.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Coeff& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Coeff at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<Coeff> row(int r) { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const Coeff> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }

  void setColumn(int c, std::span<const Coeff> v);
  Vec column(int c) const;

  static DenseMatrix identity(int n);
  DenseMatrix transposed() const;
  DenseMatrix times(const PrimeField& f, const DenseMatrix& rhs) const;
  Vec apply(const PrimeField& f, std::span<const Coeff> v) const;
  bool isZero() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Coeff> data_;
};

/// Reduced row echelon form; `pivots[k]` is the pivot column of row k.
struct Echelon {
  DenseMatrix reduced;  // rank x cols
  std::vector<int> pivots;
};

Echelon rowReduce(const PrimeField& f, DenseMatrix m);

/// A subspace of K^ambient with a basis normalized so that basis[k] has a 1 at
/// keyCols[k] and every other basis vector is 0 there. Coordinates of a
/// vector in the span are therefore read off at keyCols.
struct Subspace {
  int ambient = 0;
  std::vector<Vec> basis;
  std::vector<int> keyCols;

  int dim() const { return static_cast<int>(basis.size()); }
  Vec coordinates(std::span<const Coeff> v) const;
};

/// Span of the given vectors, normalized via reduced row echelon form.
Subspace spanOf(const PrimeField& f, int ambient, const std::vector<Vec>& vectors);
/// Kernel {x : m x = 0}; keyCols are the free columns of the echelon form.
Subspace nullspace(const PrimeField& f, const DenseMatrix& m);

/// Incremental echelon basis with sparse pivot rows: insert vectors one at a
/// time, test membership, reduce. Used for rank and complement selection.
class IncrementalEchelon {
 public:
  IncrementalEchelon(const PrimeField& f, int ambient) : field_(f), ambient_(ambient), pivotRow_(ambient, -1) {}

  /// Adds v if it is independent of the current span; returns whether it was added.
  bool insert(std::span<const Coeff> v);
  bool contains(std::span<const Coeff> v) const;
  /// Residue of v after eliminating all pivots.
  Vec reduce(std::span<const Coeff> v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  bool isPivot(int col) const { return pivotRow_[col] >= 0; }

 private:
  using SparseRow = std::vector<std::pair<int, Coeff>>;
  void reduceInPlace(std::vector<Coeff>& scratch) const;

  PrimeField field_;
  int ambient_;
  std::vector<SparseRow> rows_;  // leading entry normalized to 1
  std::vector<int> pivotRow_;
};

inline constexpr int kDenseRankThreshold = 64;

/// Rank; dense elimination up to 64x64, sparse incremental elimination above.
int rank(const PrimeField& f, const DenseMatrix& m);
int rankDense(const PrimeField& f, const DenseMatrix& m);
int rankSparse(const PrimeField& f, const DenseMatrix& m);

}  // namespace koszul
