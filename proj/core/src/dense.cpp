#include "koszul/dense.hpp"

#include <algorithm>
#include <stdexcept>

namespace koszul {

void DenseMatrix::setColumn(int c, std::span<const Coeff> v) {
  for (int r = 0; r < rows_; ++r) at(r, c) = v[static_cast<std::size_t>(r)];
}

Vec DenseMatrix::column(int c) const {
  Vec v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = at(r, c);
  return v;
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

DenseMatrix DenseMatrix::times(const PrimeField& f, const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("DenseMatrix::times: shape mismatch");
  const std::uint64_t p = f.characteristic();
  DenseMatrix out(rows_, rhs.cols_);
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(rhs.cols_));
  for (int r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t a = at(r, k);
      if (a == 0) continue;
      auto rr = rhs.row(k);
      for (int c = 0; c < rhs.cols_; ++c) acc[c] = (acc[c] + a * rr[c]) % p;
    }
    for (int c = 0; c < rhs.cols_; ++c) out.at(r, c) = static_cast<Coeff>(acc[c]);
  }
  return out;
}

Vec DenseMatrix::apply(const PrimeField& f, std::span<const Coeff> v) const {
  const std::uint64_t p = f.characteristic();
  Vec out(static_cast<std::size_t>(rows_), 0);
  for (int r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    auto rr = row(r);
    for (int c = 0; c < cols_; ++c) {
      if (v[c] == 0 || rr[c] == 0) continue;
      acc = (acc + static_cast<std::uint64_t>(rr[c]) * v[c]) % p;
    }
    out[r] = static_cast<Coeff>(acc);
  }
  return out;
}

bool DenseMatrix::isZero() const {
  return std::all_of(data_.begin(), data_.end(), [](Coeff c) { return c == 0; });
}

namespace {

// row[target] -= factor * row[source] over columns [from, cols).
void axpy(std::span<Coeff> target, std::span<const Coeff> source, Coeff factor, std::uint32_t p, int from) {
  const std::uint64_t negFactor = factor == 0 ? 0 : p - factor;
  for (std::size_t c = static_cast<std::size_t>(from); c < target.size(); ++c) {
    if (source[c] == 0) continue;
    target[c] = static_cast<Coeff>((target[c] + negFactor * source[c]) % p);
  }
}

}  // namespace

Echelon rowReduce(const PrimeField& f, DenseMatrix m) {
  const std::uint32_t p = f.characteristic();
  int rank = 0;
  std::vector<int> pivots;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int sel = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m.at(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != rank) {
      auto a = m.row(sel);
      auto b = m.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(rank);
    Coeff inv = f.inv(prow[c]);
    for (int k = c; k < m.cols(); ++k) prow[k] = f.mul(prow[k], inv);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      Coeff factor = m.at(r, c);
      if (factor != 0) axpy(m.row(r), prow, factor, p, c);
    }
    pivots.push_back(c);
    ++rank;
  }
  DenseMatrix reduced(rank, m.cols());
  for (int r = 0; r < rank; ++r) std::copy(m.row(r).begin(), m.row(r).end(), reduced.row(r).begin());
  return {std::move(reduced), std::move(pivots)};
}

Vec Subspace::coordinates(std::span<const Coeff> v) const {
  Vec c(keyCols.size());
  for (std::size_t k = 0; k < keyCols.size(); ++k) c[k] = v[static_cast<std::size_t>(keyCols[k])];
  return c;
}

Subspace spanOf(const PrimeField& f, int ambient, const std::vector<Vec>& vectors) {
  DenseMatrix m(static_cast<int>(vectors.size()), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    std::copy(vectors[r].begin(), vectors[r].end(), m.row(static_cast<int>(r)).begin());
  Echelon e = rowReduce(f, std::move(m));
  Subspace s;
  s.ambient = ambient;
  for (int r = 0; r < e.reduced.rows(); ++r) {
    s.basis.emplace_back(e.reduced.row(r).begin(), e.reduced.row(r).end());
    s.keyCols.push_back(e.pivots[static_cast<std::size_t>(r)]);
  }
  return s;
}

Subspace nullspace(const PrimeField& f, const DenseMatrix& m) {
  Echelon e = rowReduce(f, m);
  Subspace s;
  s.ambient = m.cols();
  std::vector<char> isPivot(static_cast<std::size_t>(m.cols()), 0);
  for (int c : e.pivots) isPivot[c] = 1;
  for (int free = 0; free < m.cols(); ++free) {
    if (isPivot[free]) continue;
    Vec v(static_cast<std::size_t>(m.cols()), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced.at(static_cast<int>(r), free));
    s.basis.push_back(std::move(v));
    s.keyCols.push_back(free);
  }
  return s;
}

void IncrementalEchelon::reduceInPlace(std::vector<Coeff>& scratch) const {
  const std::uint64_t p = field_.characteristic();
  for (int c = 0; c < ambient_; ++c) {
    Coeff lead = scratch[c];
    if (lead == 0) continue;
    int r = pivotRow_[c];
    if (r < 0) continue;
    const std::uint64_t neg = p - lead;
    for (const auto& [col, val] : rows_[r]) scratch[col] = static_cast<Coeff>((scratch[col] + neg * val) % p);
  }
}

Vec IncrementalEchelon::reduce(std::span<const Coeff> v) const {
  Vec scratch(v.begin(), v.end());
  reduceInPlace(scratch);
  return scratch;
}

bool IncrementalEchelon::contains(std::span<const Coeff> v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Coeff c) { return c == 0; });
}

bool IncrementalEchelon::insert(std::span<const Coeff> v) {
  Vec scratch(v.begin(), v.end());
  reduceInPlace(scratch);
  int lead = -1;
  for (int c = 0; c < ambient_; ++c)
    if (scratch[c] != 0) {
      lead = c;
      break;
    }
  if (lead < 0) return false;
  Coeff inv = field_.inv(scratch[lead]);
  SparseRow row;
  for (int c = lead; c < ambient_; ++c)
    if (scratch[c] != 0) row.emplace_back(c, field_.mul(scratch[c], inv));
  pivotRow_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

int rankDense(const PrimeField& f, const DenseMatrix& m) { return static_cast<int>(rowReduce(f, m).pivots.size()); }

int rankSparse(const PrimeField& f, const DenseMatrix& m) {
  IncrementalEchelon ech(f, m.cols());
  for (int r = 0; r < m.rows() && ech.rank() < m.cols(); ++r) ech.insert(m.row(r));
  return ech.rank();
}

int rank(const PrimeField& f, const DenseMatrix& m) {
  if (m.rows() <= kDenseRankThreshold && m.cols() <= kDenseRankThreshold) return rankDense(f, m);
  return rankSparse(f, m);
}

}  // namespace koszul
