#include "koszul/pieces.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

RingPieces::RingPieces(RingPtr ring, int maxDegree) : ring_(std::move(ring)), maxDegree_(std::max(maxDegree, 0)) {
  if (ring_->kind() == RingKind::Exterior) maxDegree_ = std::min(maxDegree_, ring_->numVars());
  if (ring_->kind() == RingKind::Quotient && maxDegree_ > ring_->degreeBound())
    throw BoundError("requested pieces up to degree " + std::to_string(maxDegree_) + " beyond the quotient bound " +
                     std::to_string(ring_->degreeBound()));
  const int n = ring_->numVars();
  bases_.resize(static_cast<std::size_t>(maxDegree_ + 1));
  index_.resize(bases_.size());
  for (int d = 0; d <= maxDegree_; ++d) {
    bases_[d] = ring_->pieceBasis(d);
    for (std::size_t k = 0; k < bases_[d].size(); ++k) index_[d].emplace(bases_[d][k], static_cast<int>(k));
  }
  leftMul_.resize(bases_.size());
  for (int d = 0; d <= maxDegree_; ++d) {
    leftMul_[d].assign(static_cast<std::size_t>(n), std::vector<SparseVec>(bases_[d].size()));
    if (d == maxDegree_) continue;
    for (int v = 0; v < n; ++v) {
      RingElem y = RingElem::variable(ring_, v);
      for (std::size_t k = 0; k < bases_[d].size(); ++k) {
        RingElem m = RingElem::fromTerms(ring_, {{bases_[d][k], 1}});
        RingElem prod = y * m;
        SparseVec sv;
        for (const Term& t : prod.terms()) sv.emplace_back(index_[d + 1].at(t.mono), t.coeff);
        std::sort(sv.begin(), sv.end());
        leftMul_[d][v][k] = std::move(sv);
      }
    }
  }
  factor_.resize(bases_.size());
  for (int d = 1; d <= maxDegree_; ++d) {
    for (const Monomial& m : bases_[d]) {
      int v = 0;
      while (m[v] == 0) ++v;
      Monomial rest = m / Monomial::variable(v);
      // y_v * rest: v is the smallest variable of m, so no sign over E.
      factor_[d].push_back({v, 1, index_[d - 1].at(rest)});
    }
  }
}

int RingPieces::dim(int degree) const {
  if (degree < 0 || degree > maxDegree_) return 0;
  return static_cast<int>(bases_[degree].size());
}

const std::vector<Monomial>& RingPieces::basis(int degree) const {
  static const std::vector<Monomial> kEmpty;
  if (degree < 0 || degree > maxDegree_) return kEmpty;
  return bases_[degree];
}

int RingPieces::indexOf(int degree, const Monomial& m) const {
  if (degree < 0 || degree > maxDegree_) return -1;
  auto it = index_[degree].find(m);
  return it == index_[degree].end() ? -1 : it->second;
}

const SparseVec& RingPieces::leftMul(int var, int degree, int k) const {
  if (degree < 0 || degree >= maxDegree_) return empty_;
  return leftMul_[degree][var][k];
}

const RingPieces::Factorization& RingPieces::factor(int degree, int k) const { return factor_[degree][k]; }

Vec RingPieces::coordinates(const RingElem& f, int degree) const {
  Vec v(static_cast<std::size_t>(dim(degree)), 0);
  for (const Term& t : f.terms()) {
    if (t.mono.degree() != degree) throw InputError("coordinates: element not of degree " + std::to_string(degree));
    int idx = indexOf(degree, t.mono);
    if (idx < 0) throw InputError("coordinates: monomial outside the piece basis");
    v[idx] = t.coeff;
  }
  return v;
}

RingElem RingPieces::element(int degree, std::span<const Coeff> coords) const {
  std::vector<Term> terms;
  const auto& b = basis(degree);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) terms.push_back({b[k], coords[k]});
  return RingElem::fromTerms(ring_, std::move(terms));
}

Vec RingPieces::productCoordinates(int degree, int k, const RingElem& a) const {
  RingElem m = RingElem::fromTerms(ring_, {{basis(degree)[k], 1}});
  RingElem prod = m * a;
  int target = degree + a.degree();
  Vec v(static_cast<std::size_t>(dim(target)), 0);
  for (const Term& t : prod.terms()) v[indexOf(target, t.mono)] = t.coeff;
  return v;
}

}  // namespace koszul
