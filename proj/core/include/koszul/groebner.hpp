#pragma once

#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/ring.hpp"

namespace koszul {

/// A term m·e_row of a free module over S.
struct ModuleTerm {
  Monomial mono;
  int row = 0;
  Coeff coeff = 0;
  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

/// Position over term: a smaller row index wins, then degrevlex. Returns
/// negative, zero or positive.
int compareModuleTerms(const ModuleTerm& a, const ModuleTerm& b);

/// Element of a graded free module over S: nonzero terms in decreasing order.
using ModuleVector = std::vector<ModuleTerm>;

ModuleVector columnVector(const HomogeneousMatrix& m, int col);
HomogeneousMatrix::Column vectorColumn(const RingPtr& ring, const ModuleVector& v, int numRows);

/// A Gröbner basis of a graded submodule of ⊕ S(-rowDegrees[r]).
class GBasis {
 public:
  GBasis(RingPtr ring, std::vector<int> rowDegrees) : ring_(std::move(ring)), rowDegs_(std::move(rowDegrees)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& rowDegrees() const { return rowDegs_; }
  const std::vector<ModuleVector>& elements() const { return elems_; }
  const std::vector<int>& degrees() const { return degs_; }
  int size() const { return static_cast<int>(elems_.size()); }
  /// Columns are the basis elements.
  HomogeneousMatrix matrix() const;

  /// Index of an element whose lead term divides t, or -1.
  int findReducer(const ModuleTerm& t) const;
  void add(ModuleVector v, int degree);
  /// Fully reduce every tail and sort by (degree, lead term).
  void interreduce();

 private:
  RingPtr ring_;
  std::vector<int> rowDegs_;
  std::vector<ModuleVector> elems_;
  std::vector<int> degs_;
  std::vector<std::vector<int>> byRow_;
};

/// Quotients recorded during a reduction: f = Σ coeff·mono·g[index] + remainder.
struct ReductionStep {
  int index;
  Monomial mono;
  Coeff coeff;
};

/// Remainder of f after full reduction by G (no term divisible by a lead term).
ModuleVector normalForm(const ModuleVector& f, const GBasis& g, std::vector<ReductionStep>* steps = nullptr);

struct BuchbergerResult {
  GBasis basis;
  /// Input columns that were not in the span of the previous ones; a minimal
  /// generating set of the column span.
  std::vector<int> minimalInputs;
};

/// Homogeneous Buchberger algorithm, degree by degree, with the chain
/// criterion (and the coprime criterion for ideals). Throws InputError unless
/// the ring is polynomial.
BuchbergerResult buchbergerWithGenerators(const HomogeneousMatrix& gens);
GBasis buchberger(const HomogeneousMatrix& gens);

/// Schreyer syzygies of a Gröbner basis: columns over the free module with one
/// generator per basis element, generating all relations among them.
HomogeneousMatrix syzygies(const GBasis& g);

/// Generators of ker φ (rows = source degrees of φ), minimal.
HomogeneousMatrix kernelOfMap(const HomogeneousMatrix& phi);

/// The minimal generating subset of the columns (zero columns dropped).
HomogeneousMatrix minimalGenerators(const HomogeneousMatrix& gens);

/// Presentation of (span gens + span rels) / span rels, on generators `gens`.
HomogeneousMatrix imagePresentation(const HomogeneousMatrix& gens, const HomogeneousMatrix& rels);

/// Presentation of span(ker) / span(im), on generators the columns of ker.
/// Throws InputError unless every column of im lies in span(ker).
HomogeneousMatrix subquotientPresentation(const HomogeneousMatrix& ker, const HomogeneousMatrix& im);

/// Presentation of the submodule spanned by the columns (relations = kernel).
HomogeneousMatrix submodulePresentation(const HomogeneousMatrix& gens);

/// Columns side by side; row degrees must agree.
HomogeneousMatrix concatColumns(const HomogeneousMatrix& a, const HomogeneousMatrix& b);

}  // namespace koszul
