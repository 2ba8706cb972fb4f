#include "koszul/complex.hpp"

#include <algorithm>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

FreeComplex::FreeComplex(RingPtr ring, int start, std::vector<std::vector<int>> terms, std::vector<HomogeneousMatrix> maps)
    : ring_(std::move(ring)), start_(start), terms_(std::move(terms)), maps_(std::move(maps)) {
  if (terms_.size() < maps_.size() + 1) terms_.resize(maps_.size() + 1);
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const auto& m = maps_[k];
    requireSameRing(*ring_, *m.ring());
    if (k == 0 && terms_[0].empty()) terms_[0] = m.colDegrees();
    if (terms_[k + 1].empty()) terms_[k + 1] = m.rowDegrees();
    if (m.colDegrees() != terms_[k] || m.rowDegrees() != terms_[k + 1])
      throw InputError("complex: map at position " + std::to_string(start_ + static_cast<int>(k)) +
                       " does not match the degrees of its terms");
  }
  while (maps_.size() + 1 < terms_.size()) {
    std::size_t k = maps_.size();
    maps_.emplace_back(ring_, terms_[k + 1], terms_[k]);
  }
}

FreeComplex FreeComplex::fromResolution(RingPtr ring, std::vector<int> p0Degrees, std::vector<HomogeneousMatrix> differentials) {
  const int len = static_cast<int>(differentials.size());
  std::vector<std::vector<int>> terms(static_cast<std::size_t>(len + 1));
  terms[len] = std::move(p0Degrees);
  std::vector<HomogeneousMatrix> maps;
  for (int i = len; i >= 1; --i) {
    terms[len - i] = differentials[i - 1].colDegrees();
    maps.push_back(std::move(differentials[i - 1]));
  }
  return FreeComplex(std::move(ring), -len, std::move(terms), std::move(maps));
}

const std::vector<int>& FreeComplex::term(int position) const {
  static const std::vector<int> kEmpty;
  int k = position - start_;
  if (k < 0 || k >= numTerms()) return kEmpty;
  return terms_[k];
}

HomogeneousMatrix FreeComplex::mapFrom(int position) const {
  int k = position - start_;
  if (k >= 0 && k < static_cast<int>(maps_.size())) return maps_[k];
  return HomogeneousMatrix(ring_, term(position + 1), term(position));
}

bool checkComplex(const FreeComplex& c) {
  for (int p = c.start(); p + 1 < c.stop(); ++p) {
    if (!compose(c.mapFrom(p + 1), c.mapFrom(p)).isZero()) return false;
  }
  return true;
}

FreeComplex linPart(const FreeComplex& c) {
  std::vector<std::vector<int>> terms;
  std::vector<HomogeneousMatrix> maps;
  for (int p = c.start(); p <= c.stop(); ++p) terms.push_back(c.term(p));
  for (int p = c.start(); p < c.stop(); ++p) {
    const HomogeneousMatrix m = c.mapFrom(p);
    HomogeneousMatrix lin(c.ring(), m.rowDegrees(), m.colDegrees());
    for (int col = 0; col < m.numCols(); ++col) {
      HomogeneousMatrix::Column kept;
      for (const auto& e : m.column(col)) {
        if (!e.value.isHomogeneous()) throw InputError("linPart: inhomogeneous entry");
        if (e.value.degree() < 2) kept.push_back(e);
      }
      lin.setColumn(col, std::move(kept));
    }
    maps.push_back(std::move(lin));
  }
  return FreeComplex(c.ring(), c.start(), std::move(terms), std::move(maps));
}

namespace {

bool findUnit(const std::vector<HomogeneousMatrix>& maps, std::size_t& k, int& row, int& col) {
  for (k = 0; k < maps.size(); ++k) {
    const auto& m = maps[k];
    for (col = 0; col < m.numCols(); ++col)
      for (const auto& e : m.column(col))
        if (m.colDegree(col) == m.rowDegree(e.row)) {
          row = e.row;
          return true;
        }
  }
  return false;
}

std::vector<int> allBut(int n, int skip) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (i != skip) v.push_back(i);
  return v;
}

}  // namespace

FreeComplex minimalize(const FreeComplex& c) {
  std::vector<std::vector<int>> terms;
  std::vector<HomogeneousMatrix> maps;
  for (int p = c.start(); p <= c.stop(); ++p) terms.push_back(c.term(p));
  for (int p = c.start(); p < c.stop(); ++p) maps.push_back(c.mapFrom(p));
  const PrimeField& field = c.ring()->field();

  std::size_t k;
  int r, col;
  while (findUnit(maps, k, r, col)) {
    HomogeneousMatrix& d = maps[k];
    const RingElem unit = d.entry(r, col);
    const Coeff uInv = field.inv(unit.leadTerm().coeff);
    const HomogeneousMatrix::Column pivotCol = d.column(col);
    // Clear row r: col' -= (a / u) * col for every other column with a = d(r, col').
    for (int other = 0; other < d.numCols(); ++other) {
      if (other == col) continue;
      RingElem a = d.entry(r, other);
      if (a.isZero()) continue;
      RingElem b = a.scaled(uInv);
      std::vector<RingElem> vals(static_cast<std::size_t>(d.numRows()), RingElem(c.ring()));
      for (const auto& e : d.column(other)) vals[e.row] = e.value;
      for (const auto& e : pivotCol) vals[e.row] = vals[e.row] - b * e.value;
      HomogeneousMatrix::Column updated;
      for (int row = 0; row < d.numRows(); ++row)
        if (!vals[row].isZero()) updated.push_back({row, vals[row]});
      d.setColumn(other, std::move(updated));
    }
    d = d.select(allBut(d.numRows(), r), allBut(d.numCols(), col));
    if (k > 0) {
      HomogeneousMatrix& prev = maps[k - 1];
      prev = prev.select(allBut(prev.numRows(), col), allBut(prev.numCols(), -1));
    }
    if (k + 1 < maps.size()) {
      HomogeneousMatrix& next = maps[k + 1];
      next = next.select(allBut(next.numRows(), -1), allBut(next.numCols(), r));
    }
    terms[k].erase(terms[k].begin() + col);
    terms[k + 1].erase(terms[k + 1].begin() + r);
  }
  return FreeComplex(c.ring(), c.start(), std::move(terms), std::move(maps));
}

bool isMinimal(const FreeComplex& c) {
  for (int p = c.start(); p < c.stop(); ++p) {
    const auto m = c.mapFrom(p);
    for (int col = 0; col < m.numCols(); ++col)
      for (const auto& e : m.column(col))
        if (m.colDegree(col) == m.rowDegree(e.row)) return false;
  }
  return true;
}

int homologyDim(const FreeComplex& c, const RingPieces& pieces, int position, int degree) {
  const PrimeField& f = c.ring()->field();
  DenseMatrix out = c.mapFrom(position).piece(pieces, degree);
  DenseMatrix in = c.mapFrom(position - 1).piece(pieces, degree);
  int dim = pieceOffsets(pieces, c.term(position), degree).back();
  int kernel = dim - (out.rows() == 0 ? 0 : rank(f, out));
  int image = in.cols() == 0 ? 0 : rank(f, in);
  return kernel - image;
}

}  // namespace koszul
