#pragma once

#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "koszul/dense.hpp"
#include "koszul/field.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

enum class RingKind { Polynomial, Exterior, Quotient };

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

struct Term {
  Monomial mono;
  Coeff coeff = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of a standard graded ring: nonzero terms sorted by decreasing
/// degrevlex order. Quotient-ring elements are kept in normal form, exterior
/// monomials are squarefree with the sign folded into the coefficient.
class RingElem {
 public:
  RingElem() = default;
  explicit RingElem(RingPtr ring) : ring_(std::move(ring)) {}

  /// Canonicalizes: merges equal monomials, drops zeros (and non-squarefree
  /// monomials over E), reduces modulo the relations over a quotient.
  static RingElem fromTerms(RingPtr ring, std::vector<Term> terms);
  static RingElem constant(RingPtr ring, Coeff c);
  static RingElem variable(RingPtr ring, int index);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isHomogeneous() const;
  /// Common degree of all terms; throws InputError if zero or inhomogeneous.
  int degree() const;
  const Term& leadTerm() const { return terms_.front(); }

  RingElem operator+(const RingElem& other) const;
  RingElem operator-(const RingElem& other) const;
  RingElem operator*(const RingElem& other) const;
  RingElem operator-() const;
  RingElem scaled(Coeff c) const;

  friend bool operator==(const RingElem& a, const RingElem& b) { return a.terms_ == b.terms_; }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string toString(const RingElem& f);

/// A polynomial ring K[x_1..x_n], an exterior algebra Λ(y_1..y_n), or a
/// quadratic quotient S/I, all generated in degree one.
class GradedRing {
 public:
  static RingPtr polynomial(const PrimeField& field, std::vector<std::string> vars);
  static RingPtr exterior(const PrimeField& field, std::vector<std::string> vars);
  /// Relations must be homogeneous of degree exactly 2 in the polynomial ring
  /// `ambient`. Normal forms are available up to `degreeBound`.
  static RingPtr quotient(const RingPtr& ambient, const std::vector<RingElem>& relations, int degreeBound = 8);

  RingKind kind() const { return kind_; }
  const PrimeField& field() const { return field_; }
  int numVars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& varNames() const { return vars_; }
  const RingPtr& ambient() const { return ambient_; }
  const std::vector<RingElem>& relations() const { return relations_; }
  /// Highest degree in which arithmetic is available (exterior: n).
  int degreeBound() const { return degreeBound_; }
  /// The same quotient with normal forms precomputed up to a larger degree.
  RingPtr withDegreeBound(int degreeBound) const;

  /// Structural equality: kind, field, variable names and relations.
  bool sameAs(const GradedRing& other) const;

  /// Canonical monomial basis of the degree-j piece, in decreasing degrevlex
  /// order (standard monomials for a quotient).
  std::vector<Monomial> pieceBasis(int degree) const;
  int pieceDim(int degree) const;

  /// Normal form of a degree-d combination of monomials of the ambient ring.
  /// Throws BoundError above degreeBound().
  std::vector<Term> reduce(int degree, std::vector<Term> terms) const;

 private:
  struct QuotientPiece {
    std::vector<Monomial> monomials;  // all of S_d, decreasing order
    std::unordered_map<Monomial, int, MonomialHash> index;
    std::vector<std::vector<std::pair<int, Coeff>>> pivotRows;  // echelon rows of I_d
    std::vector<int> pivotOf;                                   // column -> pivot row or -1
    std::vector<Monomial> standard;
  };

  GradedRing(RingKind kind, const PrimeField& field, std::vector<std::string> vars);
  void buildQuotientTables(int degreeBound);

  RingKind kind_;
  PrimeField field_;
  std::vector<std::string> vars_;
  RingPtr ambient_;
  std::vector<RingElem> relations_;
  int degreeBound_;
  std::vector<QuotientPiece> pieces_;  // indexed by degree (quotient only)
};

/// All monomials of degree d in n variables, decreasing degrevlex order.
std::vector<Monomial> monomialsOfDegree(int numVars, int degree);
/// All squarefree monomials of degree d in n variables, decreasing degrevlex order.
std::vector<Monomial> squarefreeMonomialsOfDegree(int numVars, int degree);

/// gradedPieceBasis: basis of R_j (empty for j < 0 or above the top degree).
inline std::vector<Monomial> gradedPieceBasis(const GradedRing& ring, int degree) { return ring.pieceBasis(degree); }

/// Throws InputError unless both elements live in structurally equal rings.
void requireSameRing(const GradedRing& a, const GradedRing& b);

}  // namespace koszul
