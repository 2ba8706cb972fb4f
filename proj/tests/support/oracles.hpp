#pragma once

// Brute-force linear algebra used as independent oracles. Nothing here calls
// the library's elimination, Gröbner or resolution code; only ring arithmetic
// and piece bases are shared.

#include <cstdint>
#include <vector>

#include "koszul/betti.hpp"
#include "koszul/graded_module.hpp"
#include "koszul/matrix.hpp"

namespace koszul::testing {

using Row = std::vector<std::uint64_t>;

int rankMod(std::vector<Row> rows, std::uint64_t p);

/// Coordinates in the degree-j piece of ⊕ R(-rowDeg): (row, basis monomial).
class FreePiece {
 public:
  FreePiece(const RingPtr& ring, const std::vector<int>& rowDegrees, int degree);
  int dim() const { return dim_; }
  /// Coordinates of Σ_r entries[r]·e_r (entries homogeneous of the right degrees).
  Row coordinates(const std::vector<std::pair<int, RingElem>>& entries) const;
  /// The basis vector with the given index as (row, monomial).
  std::pair<int, Monomial> basisElement(int index) const;

 private:
  RingPtr ring_;
  std::vector<int> rowDegrees_;
  int degree_;
  std::vector<int> offset_;
  std::vector<std::vector<Monomial>> bases_;
  int dim_ = 0;
};

/// Images m·col for every column and every monomial m of the right degree.
std::vector<Row> macaulayRows(const HomogeneousMatrix& gens, int degree);
/// dim_K (span of the columns)_j.
int spanDim(const HomogeneousMatrix& gens, int degree);
/// dim_K (ker φ)_j.
int kernelDim(const HomogeneousMatrix& phi, int degree);
/// dim_K coker(pres)_j.
int hilbertFunction(const HomogeneousMatrix& pres, int degree);

/// coker(pres) in degrees up to maxDegree, with the action of each variable.
class QuotientModel {
 public:
  QuotientModel(const HomogeneousMatrix& pres, int maxDegree);
  int lo() const { return lo_; }
  int maxDegree() const { return maxDegree_; }
  int dim(int degree) const;
  int numVars() const { return pres_.ring()->numVars(); }
  const PrimeField& field() const { return pres_.ring()->field(); }
  /// Matrix of x_v : M_d -> M_{d+1} as rows (dim M_{d+1} rows of dim M_d entries).
  std::vector<Row> action(int var, int degree) const;

 private:
  struct Piece {
    std::vector<Row> echelon;      // reduced rows of the relations, pivot first
    std::vector<int> pivots;
    std::vector<int> freeCols;     // basis of the quotient
  };
  Row normalForm(int degree, Row v) const;

  HomogeneousMatrix pres_;
  int lo_;
  int maxDegree_;
  std::vector<Piece> pieces_;  // indexed by degree - lo
};

/// β_{i,j} over S as dim Tor_i(M, K)_j from the Koszul complex K(x) ⊗ M.
/// The model must reach degree j - i + 1.
int bettiViaKoszul(const QuotientModel& m, int i, int j);

/// β_{i,j} over E as dim Tor_i(N, K)_j from the Cartan complex N ⊗ D_i.
int bettiViaCartan(const FiniteGradedModule& n, int i, int j);

/// Whole table from the Cartan oracle, i <= maxHomological.
BettiTable cartanBettiTable(const FiniteGradedModule& n, int maxHomological);

/// c^{n!} · (2d)^{(n-1)!} as a long double (may be +inf).
long double blBound(int c, int n, int d);

}  // namespace koszul::testing
