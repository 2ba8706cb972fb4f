#pragma once

#include <utility>
#include <vector>

#include "koszul/dense.hpp"
#include "koszul/matrix.hpp"
#include "koszul/pieces.hpp"
#include "koszul/ring.hpp"

namespace koszul {

/// A graded module given by finite-dimensional pieces N_lo..N_hi and, for each
/// ring variable v and degree j, the action matrix N_j -> N_{j+1}
/// (dim N_{j+1} rows, dim N_j columns).
///
/// Over E this is the whole module. Over S or a quotient it is a truncation
/// N_{<= hi}, and the action out of degree hi is not recorded.
class FiniteGradedModule {
 public:
  FiniteGradedModule() = default;
  /// Module with the given dimensions and zero actions.
  FiniteGradedModule(RingPtr ring, int lo, std::vector<int> dims);

  const RingPtr& ring() const { return ring_; }
  int numVars() const { return ring_->numVars(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  int dim(int degree) const;
  int totalDim() const;
  bool isZero() const { return totalDim() == 0; }
  /// Smallest / largest degree with a nonzero piece; throws InputError on zero.
  int bottomDegree() const;
  int topDegree() const;
  int maxPieceDim() const;

  /// Action of variable v on N_degree (a zero matrix of the right shape
  /// outside the recorded range).
  DenseMatrix action(int var, int degree) const;
  void setAction(int var, int degree, DenseMatrix m);
  /// y_var applied to a vector of N_degree.
  Vec act(int var, int degree, std::span<const Coeff> v) const;

  /// Checks the defining relations on composed actions: anticommutativity and
  /// square zero over E, commutativity (and the quotient relations) otherwise.
  bool satisfiesRelations() const;

  /// The same module with every degree increased by `shift` (N(-shift)).
  FiniteGradedModule shifted(int shift) const;
  /// Pieces restricted to [lo, hi] (nothing is recomputed).
  FiniteGradedModule truncated(int lo, int hi) const;

  friend bool operator==(const FiniteGradedModule&, const FiniteGradedModule&) = default;

 private:
  RingPtr ring_;
  int lo_ = 0;
  std::vector<int> dims_;
  std::vector<std::vector<DenseMatrix>> actions_;  // [degree - lo][var]
};

/// Subspaces U_j ⊂ N_j indexed by degree from `lo`.
struct GradedSubspace {
  int lo = 0;
  std::vector<Subspace> pieces;

  const Subspace* at(int degree) const;
};

/// The graded free module ⊕ R(-g) in degrees [lo, hi], with basis (generator,
/// basis monomial of R) in generator order, as a finite graded module.
FiniteGradedModule freeModule(const RingPieces& pieces, const std::vector<int>& generatorDegrees, int lo, int hi);

/// Cokernel of a presentation, realized in degrees [min row degree, maxDegree]
/// by linear algebra on graded pieces. `pieces` must reach maxDegree - min
/// row degree.
FiniteGradedModule cokernelModule(const HomogeneousMatrix& presentation, const RingPieces& pieces, int maxDegree);

/// Submodule generated by homogeneous vectors (degree, coordinates).
GradedSubspace generatedSubspace(const FiniteGradedModule& n, const std::vector<std::pair<int, Vec>>& generators);
/// The module structure on a submodule (closed under the action).
FiniteGradedModule submodule(const FiniteGradedModule& n, const GradedSubspace& u);
/// N / U. Basis of (N/U)_j: the standard basis vectors of N_j at the
/// non-key columns of U_j.
FiniteGradedModule quotientModule(const FiniteGradedModule& n, const GradedSubspace& u);
/// Coordinates in N/U of a vector of N_j.
Vec quotientCoordinates(const PrimeField& f, const Subspace& u, std::span<const Coeff> v);

/// N_⟨d⟩: the submodule generated by all of N_d.
FiniteGradedModule componentSubmodule(const FiniteGradedModule& n, int degree);
/// {v : y v = 0 for every variable y}.
FiniteGradedModule socle(const FiniteGradedModule& n);
/// (N*)_i = (N_{-i})*, with (y·φ)(v) = (-1)^{deg φ} φ(y v) over E.
FiniteGradedModule dualModule(const FiniteGradedModule& n);

/// Basis of N_j / (m N)_j: standard basis vectors of N_j, chosen in index
/// order, complementing the image of the degree j-1 actions.
std::vector<int> minimalGeneratorIndices(const FiniteGradedModule& n, int degree);

/// Same graded dimensions and same rank for every action matrix.
bool sameShape(const FiniteGradedModule& a, const FiniteGradedModule& b);

}  // namespace koszul
