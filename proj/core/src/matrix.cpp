#include "koszul/matrix.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

HomogeneousMatrix::HomogeneousMatrix(RingPtr ring, std::vector<int> rowDegrees, std::vector<int> colDegrees)
    : ring_(std::move(ring)), rowDegs_(std::move(rowDegrees)), colDegs_(std::move(colDegrees)), cols_(colDegs_.size()) {
  if (!ring_) throw InputError("matrix without a ring");
}

RingElem HomogeneousMatrix::entry(int r, int c) const {
  for (const Entry& e : cols_[static_cast<std::size_t>(c)])
    if (e.row == r) return e.value;
  return RingElem(ring_);
}

void HomogeneousMatrix::set(int r, int c, const RingElem& value) {
  if (r < 0 || r >= numRows() || c < 0 || c >= numCols()) throw InputError("matrix index out of range");
  Column& col = cols_[static_cast<std::size_t>(c)];
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, int row) { return e.row < row; });
  if (value.isZero()) {
    if (it != col.end() && it->row == r) col.erase(it);
    return;
  }
  requireSameRing(*ring_, *value.ring());
  if (!value.isHomogeneous() || value.degree() != colDegree(c) - rowDegree(r))
    throw InputError("entry " + toString(value) + " at (" + std::to_string(r) + "," + std::to_string(c) +
                     ") is not homogeneous of degree " + std::to_string(colDegree(c) - rowDegree(r)));
  if (it != col.end() && it->row == r)
    it->value = value;
  else
    col.insert(it, Entry{r, value});
}

void HomogeneousMatrix::setColumn(int c, Column column) {
  cols_[static_cast<std::size_t>(c)].clear();
  for (Entry& e : column) set(e.row, c, e.value);
}

void HomogeneousMatrix::appendColumn(int degree, Column column) {
  colDegs_.push_back(degree);
  cols_.emplace_back();
  setColumn(numCols() - 1, std::move(column));
}

bool HomogeneousMatrix::isZero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

HomogeneousMatrix HomogeneousMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
  std::vector<int> newRow(static_cast<std::size_t>(numRows()), -1);
  std::vector<int> rd, cd;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    newRow[rows[i]] = static_cast<int>(i);
    rd.push_back(rowDegree(rows[i]));
  }
  for (int c : cols) cd.push_back(colDegree(c));
  HomogeneousMatrix out(ring_, rd, cd);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Column col;
    for (const Entry& e : column(cols[j]))
      if (newRow[e.row] >= 0) col.push_back({newRow[e.row], e.value});
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    out.cols_[j] = std::move(col);
  }
  return out;
}

HomogeneousMatrix HomogeneousMatrix::overRing(const RingPtr& ring) const {
  HomogeneousMatrix out(ring, rowDegs_, colDegs_);
  for (int c = 0; c < numCols(); ++c)
    for (const Entry& e : column(c)) out.set(e.row, c, RingElem::fromTerms(ring, e.value.terms()));
  return out;
}

bool operator==(const HomogeneousMatrix& a, const HomogeneousMatrix& b) {
  if (a.rowDegs_ != b.rowDegs_ || a.colDegs_ != b.colDegs_) return false;
  if (!a.ring_->sameAs(*b.ring_)) return false;
  for (std::size_t c = 0; c < a.cols_.size(); ++c) {
    if (a.cols_[c].size() != b.cols_[c].size()) return false;
    for (std::size_t k = 0; k < a.cols_[c].size(); ++k)
      if (a.cols_[c][k].row != b.cols_[c][k].row || !(a.cols_[c][k].value == b.cols_[c][k].value)) return false;
  }
  return true;
}

HomogeneousMatrix compose(const HomogeneousMatrix& after, const HomogeneousMatrix& before) {
  if (after.colDegrees() != before.rowDegrees())
    throw InputError("compose: degrees of the middle module do not match");
  requireSameRing(*after.ring(), *before.ring());
  HomogeneousMatrix out(before.ring(), after.rowDegrees(), before.colDegrees());
  for (int c = 0; c < before.numCols(); ++c) {
    std::vector<RingElem> acc(static_cast<std::size_t>(after.numRows()), RingElem(before.ring()));
    for (const auto& e : before.column(c))
      for (const auto& f : after.column(e.row)) acc[f.row] = acc[f.row] + e.value * f.value;
    HomogeneousMatrix::Column col;
    for (int r = 0; r < after.numRows(); ++r)
      if (!acc[r].isZero()) col.push_back({r, acc[r]});
    out.setColumn(c, std::move(col));
  }
  return out;
}

std::vector<int> pieceOffsets(const RingPieces& pieces, const std::vector<int>& generatorDegrees, int degree) {
  std::vector<int> off(generatorDegrees.size() + 1, 0);
  for (std::size_t g = 0; g < generatorDegrees.size(); ++g) off[g + 1] = off[g] + pieces.dim(degree - generatorDegrees[g]);
  return off;
}

DenseMatrix HomogeneousMatrix::piece(const RingPieces& pieces, int degree) const {
  auto rowOff = pieceOffsets(pieces, rowDegs_, degree);
  auto colOff = pieceOffsets(pieces, colDegs_, degree);
  DenseMatrix m(rowOff.back(), colOff.back());
  for (int c = 0; c < numCols(); ++c) {
    int sd = degree - colDegree(c);
    for (int k = 0; k < pieces.dim(sd); ++k) {
      int col = colOff[c] + k;
      for (const Entry& e : column(c)) {
        int td = degree - rowDegree(e.row);
        if (pieces.dim(td) == 0) continue;
        Vec v = pieces.productCoordinates(sd, k, e.value);
        for (std::size_t t = 0; t < v.size(); ++t)
          if (v[t] != 0) m.at(rowOff[e.row] + static_cast<int>(t), col) = v[t];
      }
    }
  }
  return m;
}

}  // namespace koszul
