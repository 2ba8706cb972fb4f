#pragma once

#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "koszul/ring.hpp"

namespace koszul {

using SparseVec = std::vector<std::pair<int, Coeff>>;

/// Monomial bases of the graded pieces R_0..R_maxDegree of a ring together
/// with left multiplication by each variable, R_d -> R_{d+1}.
class RingPieces {
 public:
  RingPieces(RingPtr ring, int maxDegree);

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  int maxDegree() const { return maxDegree_; }
  int dim(int degree) const;
  const std::vector<Monomial>& basis(int degree) const;
  /// Index of a basis monomial, or -1.
  int indexOf(int degree, const Monomial& m) const;

  /// y_var * (basis element k of degree d), as a sparse vector in degree d+1.
  /// Empty when d+1 exceeds maxDegree.
  const SparseVec& leftMul(int var, int degree, int k) const;

  /// For a basis monomial m of degree d > 0: a variable v, a sign and the
  /// index of m' in degree d-1 with m = sign * y_v * m'.
  struct Factorization {
    int var;
    int sign;
    int rest;
  };
  const Factorization& factor(int degree, int k) const;

  Vec coordinates(const RingElem& f, int degree) const;
  RingElem element(int degree, std::span<const Coeff> coords) const;
  /// Coordinates of (basis element k of degree d) * a.
  Vec productCoordinates(int degree, int k, const RingElem& a) const;

 private:
  RingPtr ring_;
  int maxDegree_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> index_;
  std::vector<std::vector<std::vector<SparseVec>>> leftMul_;  // [degree][var][k]
  std::vector<std::vector<Factorization>> factor_;
  SparseVec empty_;
};

}  // namespace koszul
