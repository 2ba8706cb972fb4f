#include "koszul/graded_module.hpp"

#include <algorithm>
#include <numeric>

#include "koszul/errors.hpp"

namespace koszul {

FiniteGradedModule::FiniteGradedModule(RingPtr ring, int lo, std::vector<int> dims)
    : ring_(std::move(ring)), lo_(lo), dims_(std::move(dims)) {
  if (dims_.empty()) dims_.push_back(0);
  actions_.resize(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    int target = k + 1 < dims_.size() ? dims_[k + 1] : 0;
    actions_[k].assign(static_cast<std::size_t>(numVars()), DenseMatrix(target, dims_[k]));
  }
}

int FiniteGradedModule::dim(int degree) const {
  if (degree < lo_ || degree > hi()) return 0;
  return dims_[static_cast<std::size_t>(degree - lo_)];
}

int FiniteGradedModule::totalDim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

int FiniteGradedModule::bottomDegree() const {
  for (int j = lo_; j <= hi(); ++j)
    if (dim(j) > 0) return j;
  throw InputError("zero module has no bottom degree");
}

int FiniteGradedModule::topDegree() const {
  for (int j = hi(); j >= lo_; --j)
    if (dim(j) > 0) return j;
  throw InputError("zero module has no top degree");
}

int FiniteGradedModule::maxPieceDim() const { return *std::max_element(dims_.begin(), dims_.end()); }

DenseMatrix FiniteGradedModule::action(int var, int degree) const {
  if (degree < lo_ || degree > hi()) return DenseMatrix(dim(degree + 1), dim(degree));
  return actions_[static_cast<std::size_t>(degree - lo_)][static_cast<std::size_t>(var)];
}

void FiniteGradedModule::setAction(int var, int degree, DenseMatrix m) {
  if (m.rows() != dim(degree + 1) || m.cols() != dim(degree)) throw InputError("action matrix has the wrong shape");
  if (degree < lo_ || degree > hi()) return;
  actions_[static_cast<std::size_t>(degree - lo_)][static_cast<std::size_t>(var)] = std::move(m);
}

Vec FiniteGradedModule::act(int var, int degree, std::span<const Coeff> v) const {
  if (degree < lo_ || degree >= hi()) return Vec(static_cast<std::size_t>(dim(degree + 1)), 0);
  return actions_[static_cast<std::size_t>(degree - lo_)][static_cast<std::size_t>(var)].apply(ring_->field(), v);
}

namespace {

DenseMatrix addScaled(const PrimeField& f, DenseMatrix a, const DenseMatrix& b, Coeff c) {
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) a.at(r, k) = f.add(a.at(r, k), f.mul(c, b.at(r, k)));
  return a;
}

}  // namespace

bool FiniteGradedModule::satisfiesRelations() const {
  const PrimeField& f = ring_->field();
  const int n = numVars();
  for (int j = lo_; j + 1 < hi(); ++j) {
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        DenseMatrix ab = action(a, j + 1).times(f, action(b, j));
        DenseMatrix ba = action(b, j + 1).times(f, action(a, j));
        if (ring_->kind() == RingKind::Exterior) {
          if (!addScaled(f, ab, ba, 1).isZero()) return false;
        } else if (!addScaled(f, ab, ba, f.neg(1)).isZero()) {
          return false;
        }
      }
    }
    if (ring_->kind() == RingKind::Quotient) {
      for (const RingElem& rel : ring_->relations()) {
        DenseMatrix acc(dim(j + 2), dim(j));
        for (const Term& t : rel.terms()) {
          int a = -1, b = -1;
          for (int v = 0; v < n; ++v)
            for (int e = 0; e < t.mono[v]; ++e) (a < 0 ? a : b) = v;
          acc = addScaled(f, acc, action(a, j + 1).times(f, action(b, j)), t.coeff);
        }
        if (!acc.isZero()) return false;
      }
    }
  }
  return true;
}

FiniteGradedModule FiniteGradedModule::shifted(int shift) const {
  FiniteGradedModule out = *this;
  out.lo_ += shift;
  return out;
}

FiniteGradedModule FiniteGradedModule::truncated(int lo, int hi) const {
  lo = std::max(lo, lo_);
  hi = std::min(hi, this->hi());
  if (hi < lo) return FiniteGradedModule(ring_, lo, {0});
  std::vector<int> dims;
  for (int j = lo; j <= hi; ++j) dims.push_back(dim(j));
  FiniteGradedModule out(ring_, lo, dims);
  for (int j = lo; j < hi; ++j)
    for (int v = 0; v < numVars(); ++v) out.setAction(v, j, action(v, j));
  return out;
}

const Subspace* GradedSubspace::at(int degree) const {
  if (degree < lo || degree >= lo + static_cast<int>(pieces.size())) return nullptr;
  return &pieces[static_cast<std::size_t>(degree - lo)];
}

FiniteGradedModule freeModule(const RingPieces& pieces, const std::vector<int>& generatorDegrees, int lo, int hi) {
  std::vector<int> dims;
  for (int j = lo; j <= hi; ++j) dims.push_back(pieceOffsets(pieces, generatorDegrees, j).back());
  FiniteGradedModule out(pieces.ring(), lo, dims);
  const int n = pieces.ring()->numVars();
  for (int j = lo; j < hi; ++j) {
    auto src = pieceOffsets(pieces, generatorDegrees, j);
    auto dst = pieceOffsets(pieces, generatorDegrees, j + 1);
    for (int v = 0; v < n; ++v) {
      DenseMatrix m(dst.back(), src.back());
      for (std::size_t g = 0; g < generatorDegrees.size(); ++g) {
        int d = j - generatorDegrees[g];
        for (int k = 0; k < pieces.dim(d); ++k)
          for (const auto& [idx, c] : pieces.leftMul(v, d, k)) m.at(dst[g] + idx, src[g] + k) = c;
      }
      out.setAction(v, j, std::move(m));
    }
  }
  return out;
}

namespace {

Subspace zeroSubspace(int ambient) {
  Subspace s;
  s.ambient = ambient;
  return s;
}

}  // namespace

Vec quotientCoordinates(const PrimeField& f, const Subspace& u, std::span<const Coeff> v) {
  Vec w(v.begin(), v.end());
  for (std::size_t k = 0; k < u.keyCols.size(); ++k) {
    Coeff c = w[u.keyCols[k]];
    if (c == 0) continue;
    const Vec& b = u.basis[k];
    for (std::size_t t = 0; t < w.size(); ++t)
      if (b[t] != 0) w[t] = f.sub(w[t], f.mul(c, b[t]));
  }
  std::vector<char> key(static_cast<std::size_t>(u.ambient), 0);
  for (int c : u.keyCols) key[c] = 1;
  Vec out;
  for (int c = 0; c < u.ambient; ++c)
    if (!key[c]) out.push_back(w[c]);
  return out;
}

FiniteGradedModule quotientModule(const FiniteGradedModule& n, const GradedSubspace& u) {
  const PrimeField& f = n.ring()->field();
  std::vector<Subspace> sub;
  for (int j = n.lo(); j <= n.hi(); ++j) {
    const Subspace* s = u.at(j);
    sub.push_back(s ? *s : zeroSubspace(n.dim(j)));
  }
  std::vector<int> dims;
  for (const Subspace& s : sub) dims.push_back(s.ambient - s.dim());
  FiniteGradedModule out(n.ring(), n.lo(), dims);
  for (int j = n.lo(); j < n.hi(); ++j) {
    const Subspace& here = sub[static_cast<std::size_t>(j - n.lo())];
    const Subspace& next = sub[static_cast<std::size_t>(j + 1 - n.lo())];
    std::vector<int> free;
    std::vector<char> key(static_cast<std::size_t>(here.ambient), 0);
    for (int c : here.keyCols) key[c] = 1;
    for (int c = 0; c < here.ambient; ++c)
      if (!key[c]) free.push_back(c);
    for (int v = 0; v < n.numVars(); ++v) {
      DenseMatrix a = n.action(v, j);
      DenseMatrix m(out.dim(j + 1), out.dim(j));
      for (std::size_t k = 0; k < free.size(); ++k) {
        Vec img = a.column(free[k]);
        Vec q = quotientCoordinates(f, next, img);
        m.setColumn(static_cast<int>(k), q);
      }
      out.setAction(v, j, std::move(m));
    }
  }
  return out;
}

GradedSubspace generatedSubspace(const FiniteGradedModule& n, const std::vector<std::pair<int, Vec>>& generators) {
  const PrimeField& f = n.ring()->field();
  GradedSubspace u;
  u.lo = n.lo();
  for (int j = n.lo(); j <= n.hi(); ++j) {
    std::vector<Vec> vecs;
    for (const auto& [deg, v] : generators)
      if (deg == j) vecs.push_back(v);
    if (j > n.lo()) {
      const Subspace& prev = u.pieces.back();
      for (int v = 0; v < n.numVars(); ++v)
        for (const Vec& b : prev.basis) vecs.push_back(n.act(v, j - 1, b));
    }
    u.pieces.push_back(spanOf(f, n.dim(j), vecs));
  }
  return u;
}

FiniteGradedModule submodule(const FiniteGradedModule& n, const GradedSubspace& u) {
  std::vector<int> dims;
  for (int j = n.lo(); j <= n.hi(); ++j) dims.push_back(u.at(j) ? u.at(j)->dim() : 0);
  FiniteGradedModule out(n.ring(), n.lo(), dims);
  for (int j = n.lo(); j < n.hi(); ++j) {
    const Subspace* here = u.at(j);
    const Subspace* next = u.at(j + 1);
    if (!here || !next || here->dim() == 0 || next->dim() == 0) continue;
    for (int v = 0; v < n.numVars(); ++v) {
      DenseMatrix m(next->dim(), here->dim());
      for (int k = 0; k < here->dim(); ++k) m.setColumn(k, next->coordinates(n.act(v, j, here->basis[k])));
      out.setAction(v, j, std::move(m));
    }
  }
  return out;
}

FiniteGradedModule componentSubmodule(const FiniteGradedModule& n, int degree) {
  std::vector<std::pair<int, Vec>> gens;
  for (int k = 0; k < n.dim(degree); ++k) {
    Vec e(static_cast<std::size_t>(n.dim(degree)), 0);
    e[k] = 1;
    gens.emplace_back(degree, std::move(e));
  }
  return submodule(n, generatedSubspace(n, gens));
}

FiniteGradedModule socle(const FiniteGradedModule& n) {
  const PrimeField& f = n.ring()->field();
  GradedSubspace u;
  u.lo = n.lo();
  for (int j = n.lo(); j <= n.hi(); ++j) {
    int rows = 0;
    for (int v = 0; v < n.numVars(); ++v) rows += n.dim(j + 1);
    DenseMatrix stacked(rows, n.dim(j));
    int r0 = 0;
    for (int v = 0; v < n.numVars(); ++v) {
      DenseMatrix a = n.action(v, j);
      for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) stacked.at(r0 + r, c) = a.at(r, c);
      r0 += a.rows();
    }
    if (j == n.hi() && n.ring()->kind() != RingKind::Exterior)
      throw InputError("socle of a truncated module is not determined");
    u.pieces.push_back(nullspace(f, stacked));
  }
  return submodule(n, u);
}

FiniteGradedModule dualModule(const FiniteGradedModule& n) {
  const PrimeField& f = n.ring()->field();
  std::vector<int> dims;
  for (int i = -n.hi(); i <= -n.lo(); ++i) dims.push_back(n.dim(-i));
  FiniteGradedModule out(n.ring(), -n.hi(), dims);
  const bool exterior = n.ring()->kind() == RingKind::Exterior;
  for (int i = -n.hi(); i < -n.lo(); ++i) {
    Coeff sign = exterior && (i % 2 != 0) ? f.neg(1) : 1;
    for (int v = 0; v < n.numVars(); ++v) {
      DenseMatrix t = n.action(v, -i - 1).transposed();
      for (int r = 0; r < t.rows(); ++r)
        for (int c = 0; c < t.cols(); ++c) t.at(r, c) = f.mul(t.at(r, c), sign);
      out.setAction(v, i, std::move(t));
    }
  }
  return out;
}

std::vector<int> minimalGeneratorIndices(const FiniteGradedModule& n, int degree) {
  const PrimeField& f = n.ring()->field();
  IncrementalEchelon ech(f, n.dim(degree));
  for (int v = 0; v < n.numVars(); ++v) {
    DenseMatrix a = n.action(v, degree - 1);
    for (int c = 0; c < a.cols(); ++c) ech.insert(a.column(c));
  }
  std::vector<int> out;
  for (int k = 0; k < n.dim(degree) && ech.rank() < n.dim(degree); ++k) {
    Vec e(static_cast<std::size_t>(n.dim(degree)), 0);
    e[k] = 1;
    if (ech.insert(e)) out.push_back(k);
  }
  return out;
}

bool sameShape(const FiniteGradedModule& a, const FiniteGradedModule& b) {
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  if (a.numVars() != b.numVars()) return false;
  const PrimeField& f = a.ring()->field();
  for (int j = lo; j <= hi; ++j) {
    if (a.dim(j) != b.dim(j)) return false;
    for (int v = 0; v < a.numVars(); ++v)
      if (rank(f, a.action(v, j)) != rank(f, b.action(v, j))) return false;
  }
  return true;
}

FiniteGradedModule cokernelModule(const HomogeneousMatrix& presentation, const RingPieces& pieces, int maxDegree) {
  const auto& rows = presentation.rowDegrees();
  if (rows.empty()) return FiniteGradedModule(presentation.ring(), 0, {0});
  const int lo = *std::min_element(rows.begin(), rows.end());
  if (maxDegree < lo) return FiniteGradedModule(presentation.ring(), lo, {0});
  FiniteGradedModule free = freeModule(pieces, rows, lo, maxDegree);
  const PrimeField& f = presentation.ring()->field();
  GradedSubspace u;
  u.lo = lo;
  for (int j = lo; j <= maxDegree; ++j) {
    DenseMatrix img = presentation.piece(pieces, j);
    std::vector<Vec> vecs;
    for (int c = 0; c < img.cols(); ++c) vecs.push_back(img.column(c));
    u.pieces.push_back(spanOf(f, free.dim(j), vecs));
  }
  return quotientModule(free, u);
}

}  // namespace koszul
