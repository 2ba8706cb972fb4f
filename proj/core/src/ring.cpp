#include "koszul/ring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

bool termGreater(const Term& a, const Term& b) { return compareDegRevLex(a.mono, b.mono) > 0; }

void enumerate(int numVars, int degree, int var, std::vector<int>& exps, bool squarefree, std::vector<Monomial>& out) {
  if (var == numVars - 1) {
    if (squarefree && degree > 1) return;
    exps[static_cast<std::size_t>(var)] = degree;
    out.push_back(Monomial::fromExponents(exps));
    exps[static_cast<std::size_t>(var)] = 0;
    return;
  }
  int top = squarefree ? std::min(degree, 1) : degree;
  for (int e = 0; e <= top; ++e) {
    exps[static_cast<std::size_t>(var)] = e;
    enumerate(numVars, degree - e, var + 1, exps, squarefree, out);
  }
  exps[static_cast<std::size_t>(var)] = 0;
}

std::vector<Term> canonicalize(const PrimeField& field, std::vector<Term> terms, bool squarefreeOnly) {
  std::sort(terms.begin(), terms.end(), termGreater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (squarefreeOnly && !t.mono.isSquarefree()) continue;
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  return out;
}

}  // namespace

std::vector<Monomial> monomialsOfDegree(int numVars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || numVars <= 0) return out;
  std::vector<int> exps(static_cast<std::size_t>(numVars), 0);
  enumerate(numVars, degree, 0, exps, false, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compareDegRevLex(a, b) > 0; });
  return out;
}

std::vector<Monomial> squarefreeMonomialsOfDegree(int numVars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || degree > numVars || numVars <= 0) return out;
  std::vector<int> exps(static_cast<std::size_t>(numVars), 0);
  enumerate(numVars, degree, 0, exps, true, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compareDegRevLex(a, b) > 0; });
  return out;
}

// ---------------------------------------------------------------------------
// GradedRing

GradedRing::GradedRing(RingKind kind, const PrimeField& field, std::vector<std::string> vars)
    : kind_(kind), field_(field), vars_(std::move(vars)), degreeBound_(0) {
  if (vars_.empty()) throw InputError("a ring needs at least one variable");
  if (vars_.size() > static_cast<std::size_t>(kMaxVars))
    throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw InputError("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) throw InputError("duplicate variable name '" + vars_[i] + "'");
  }
}

RingPtr GradedRing::polynomial(const PrimeField& field, std::vector<std::string> vars) {
  auto r = std::shared_ptr<GradedRing>(new GradedRing(RingKind::Polynomial, field, std::move(vars)));
  r->degreeBound_ = std::numeric_limits<int>::max();
  return r;
}

RingPtr GradedRing::exterior(const PrimeField& field, std::vector<std::string> vars) {
  auto r = std::shared_ptr<GradedRing>(new GradedRing(RingKind::Exterior, field, std::move(vars)));
  r->degreeBound_ = r->numVars();
  return r;
}

RingPtr GradedRing::quotient(const RingPtr& ambient, const std::vector<RingElem>& relations, int degreeBound) {
  if (!ambient || ambient->kind() != RingKind::Polynomial)
    throw InputError("quotient rings need a polynomial ambient ring");
  for (const RingElem& rel : relations) {
    if (!rel.ring() || !rel.ring()->sameAs(*ambient)) throw InputError("relation lives in a different ring");
    if (rel.isZero()) continue;
    if (!rel.isHomogeneous() || rel.degree() != 2) throw InputError("quotient relations must be homogeneous of degree 2");
  }
  auto r = std::shared_ptr<GradedRing>(new GradedRing(RingKind::Quotient, ambient->field(), ambient->varNames()));
  r->ambient_ = ambient;
  for (const RingElem& rel : relations)
    if (!rel.isZero()) r->relations_.push_back(rel);
  r->buildQuotientTables(std::max(degreeBound, 2));
  return r;
}

RingPtr GradedRing::withDegreeBound(int degreeBound) const {
  if (kind_ != RingKind::Quotient) throw InputError("withDegreeBound applies to quotient rings only");
  return quotient(ambient_, relations_, degreeBound);
}

void GradedRing::buildQuotientTables(int degreeBound) {
  degreeBound_ = degreeBound;
  const int n = numVars();
  pieces_.assign(static_cast<std::size_t>(degreeBound + 1), {});
  for (int d = 0; d <= degreeBound; ++d) {
    QuotientPiece& piece = pieces_[static_cast<std::size_t>(d)];
    piece.monomials = monomialsOfDegree(n, d);
    for (std::size_t i = 0; i < piece.monomials.size(); ++i) piece.index.emplace(piece.monomials[i], static_cast<int>(i));
    const int dim = static_cast<int>(piece.monomials.size());
    IncrementalEchelon ech(field_, dim);
    std::vector<Vec> generators;
    if (d == 2) {
      for (const RingElem& rel : relations_) {
        Vec v(static_cast<std::size_t>(dim), 0);
        for (const Term& t : rel.terms()) v[piece.index.at(t.mono)] = t.coeff;
        generators.push_back(std::move(v));
      }
    } else if (d > 2) {
      const QuotientPiece& prev = pieces_[static_cast<std::size_t>(d - 1)];
      for (const auto& row : prev.pivotRows) {
        for (int var = 0; var < n; ++var) {
          Vec v(static_cast<std::size_t>(dim), 0);
          Monomial x = Monomial::variable(var);
          for (const auto& [col, val] : row) v[piece.index.at(prev.monomials[col] * x)] = val;
          generators.push_back(std::move(v));
        }
      }
    }
    // Dense RREF keeps the pivot rows fully reduced; normal forms only need
    // an echelon form, but fully reduced rows are shorter.
    Subspace ideal = spanOf(field_, dim, generators);
    piece.pivotOf.assign(static_cast<std::size_t>(dim), -1);
    for (int k = 0; k < ideal.dim(); ++k) {
      std::vector<std::pair<int, Coeff>> sparse;
      for (int c = 0; c < dim; ++c)
        if (ideal.basis[k][c] != 0) sparse.emplace_back(c, ideal.basis[k][c]);
      piece.pivotOf[ideal.keyCols[k]] = static_cast<int>(piece.pivotRows.size());
      piece.pivotRows.push_back(std::move(sparse));
    }
    for (int c = 0; c < dim; ++c)
      if (piece.pivotOf[c] < 0) piece.standard.push_back(piece.monomials[c]);
  }
}

bool GradedRing::sameAs(const GradedRing& other) const {
  if (this == &other) return true;
  return kind_ == other.kind_ && field_ == other.field_ && vars_ == other.vars_ && relations_ == other.relations_;
}

void requireSameRing(const GradedRing& a, const GradedRing& b) {
  if (!a.sameAs(b)) throw InputError("ring mismatch");
}

std::vector<Monomial> GradedRing::pieceBasis(int degree) const {
  if (degree < 0) return {};
  switch (kind_) {
    case RingKind::Polynomial:
      return monomialsOfDegree(numVars(), degree);
    case RingKind::Exterior:
      return squarefreeMonomialsOfDegree(numVars(), degree);
    case RingKind::Quotient:
      if (degree > degreeBound_)
        throw BoundError("quotient ring piece of degree " + std::to_string(degree) + " exceeds precomputed bound " +
                         std::to_string(degreeBound_));
      return pieces_[static_cast<std::size_t>(degree)].standard;
  }
  return {};
}

int GradedRing::pieceDim(int degree) const {
  if (degree < 0) return 0;
  if (kind_ == RingKind::Quotient) return static_cast<int>(pieceBasis(degree).size());
  if (kind_ == RingKind::Exterior && degree > numVars()) return 0;
  // Binomial coefficients.
  long long num = 1, den = 1;
  int n = numVars();
  if (kind_ == RingKind::Polynomial) {
    for (int i = 1; i <= degree; ++i) {
      num *= (n - 1 + i);
      den *= i;
      long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  } else {
    for (int i = 1; i <= degree; ++i) {
      num *= (n - i + 1);
      den *= i;
      long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  return static_cast<int>(num / den);
}

std::vector<Term> GradedRing::reduce(int degree, std::vector<Term> terms) const {
  if (kind_ != RingKind::Quotient) return canonicalize(field_, std::move(terms), kind_ == RingKind::Exterior);
  if (degree < 2) return canonicalize(field_, std::move(terms), false);
  if (degree > degreeBound_)
    throw BoundError("quotient arithmetic in degree " + std::to_string(degree) + " exceeds precomputed bound " +
                     std::to_string(degreeBound_));
  const QuotientPiece& piece = pieces_[static_cast<std::size_t>(degree)];
  const std::uint64_t p = field_.characteristic();
  Vec v(piece.monomials.size(), 0);
  for (const Term& t : terms) {
    auto it = piece.index.find(t.mono);
    if (it == piece.index.end()) throw InputError("term of wrong degree passed to reduce");
    v[it->second] = field_.add(v[it->second], t.coeff);
  }
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0 || piece.pivotOf[c] < 0) continue;
    const std::uint64_t neg = p - v[c];
    for (const auto& [col, val] : piece.pivotRows[piece.pivotOf[c]])
      v[col] = static_cast<Coeff>((v[col] + neg * val) % p);
  }
  std::vector<Term> out;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) out.push_back({piece.monomials[c], v[c]});
  return out;
}

// ---------------------------------------------------------------------------
// RingElem

RingElem RingElem::fromTerms(RingPtr ring, std::vector<Term> terms) {
  if (!ring) throw InputError("RingElem without a ring");
  for (const Term& t : terms)
    for (int i = ring->numVars(); i < kMaxVars; ++i)
      if (t.mono[i] != 0) throw InputError("monomial uses a variable outside the ring");
  RingElem e(ring);
  if (ring->kind() != RingKind::Quotient) {
    e.terms_ = canonicalize(ring->field(), std::move(terms), ring->kind() == RingKind::Exterior);
    return e;
  }
  std::map<int, std::vector<Term>> byDegree;
  for (Term& t : terms) byDegree[t.mono.degree()].push_back(t);
  std::vector<Term> all;
  for (auto& [deg, ts] : byDegree) {
    auto reduced = ring->reduce(deg, std::move(ts));
    all.insert(all.end(), reduced.begin(), reduced.end());
  }
  e.terms_ = canonicalize(ring->field(), std::move(all), false);
  return e;
}

RingElem RingElem::constant(RingPtr ring, Coeff c) { return fromTerms(std::move(ring), {{Monomial{}, c}}); }

RingElem RingElem::variable(RingPtr ring, int index) {
  if (!ring || index < 0 || index >= ring->numVars()) throw InputError("variable index out of range");
  return fromTerms(std::move(ring), {{Monomial::variable(index), 1}});
}

bool RingElem::isHomogeneous() const {
  for (const Term& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

int RingElem::degree() const {
  if (terms_.empty()) throw InputError("degree of the zero element");
  if (!isHomogeneous()) throw InputError("element " + toString(*this) + " is not homogeneous");
  return terms_.front().mono.degree();
}

RingElem RingElem::operator+(const RingElem& other) const {
  requireSameRing(*ring_, *other.ring_);
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  RingElem e(ring_);
  e.terms_ = canonicalize(ring_->field(), std::move(all), false);
  return e;
}

RingElem RingElem::operator-() const {
  RingElem e(ring_);
  e.terms_ = terms_;
  for (Term& t : e.terms_) t.coeff = ring_->field().neg(t.coeff);
  return e;
}

RingElem RingElem::operator-(const RingElem& other) const { return *this + (-other); }

RingElem RingElem::scaled(Coeff c) const {
  RingElem e(ring_);
  if (c == 0) return e;
  e.terms_ = terms_;
  for (Term& t : e.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return e;
}

RingElem RingElem::operator*(const RingElem& other) const {
  if (!ring_ || !other.ring_) throw InputError("RingElem without a ring");
  requireSameRing(*ring_, *other.ring_);
  const PrimeField& f = ring_->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  const bool ext = ring_->kind() == RingKind::Exterior;
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      Coeff c = f.mul(a.coeff, b.coeff);
      if (ext) {
        std::uint32_t ma = a.mono.support(), mb = b.mono.support();
        if ((ma & mb) != 0) continue;
        if (exteriorSign(ma, mb) < 0) c = f.neg(c);
      }
      prod.push_back({a.mono * b.mono, c});
    }
  }
  return fromTerms(ring_, std::move(prod));
}

std::string toString(const RingElem& f) {
  if (f.isZero()) return "0";
  const auto& ring = *f.ring();
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms()) {
    std::int64_t c = ring.field().toSigned(t.coeff);
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool needStar = false;
    if (c != 1 || t.mono.isOne()) {
      os << c;
      needStar = true;
    }
    for (int i = 0; i < ring.numVars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (needStar) os << '*';
      os << ring.varNames()[static_cast<std::size_t>(i)];
      if (e > 1) os << '^' << e;
      needStar = true;
    }
  }
  return os.str();
}

}  // namespace koszul
