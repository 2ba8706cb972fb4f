#include "koszul/bgg.hpp"

#include <algorithm>

#include "koszul/errors.hpp"
#include "koszul/exterior.hpp"
#include "koszul/groebner.hpp"

namespace koszul {

RingPtr koszulDualRing(const GradedRing& ring) {
  std::vector<std::string> names;
  const bool toS = ring.kind() == RingKind::Exterior;
  if (!toS && ring.kind() != RingKind::Polynomial) throw InputError("only S and E have a Koszul dual here");
  for (int i = 0; i < ring.numVars(); ++i) names.push_back((toS ? "x" : "y") + std::to_string(i + 1));
  return toS ? GradedRing::polynomial(ring.field(), names) : GradedRing::exterior(ring.field(), names);
}

namespace {

// Complex with term p = R ⊗ (N_{-p})* for p in [-hi, -lo] and entries
// (-1)^p Σ_λ A_λ(k, l) v_λ.
FreeComplex dualComplex(const FiniteGradedModule& n, const RingPtr& target, int lo, int hi) {
  const PrimeField& f = target->field();
  if (hi < lo) return FreeComplex(target, 0, {{}}, {});
  std::vector<std::vector<int>> terms;
  for (int p = -hi; p <= -lo; ++p) terms.emplace_back(static_cast<std::size_t>(n.dim(-p)), -p);
  std::vector<HomogeneousMatrix> maps;
  for (int p = -hi; p < -lo; ++p) {
    HomogeneousMatrix m(target, terms[static_cast<std::size_t>(p + 1 + hi)], terms[static_cast<std::size_t>(p + hi)]);
    const Coeff sign = (p % 2 == 0) ? 1 : f.neg(1);
    std::vector<DenseMatrix> acts;
    for (int v = 0; v < n.numVars(); ++v) acts.push_back(n.action(v, -p - 1));
    for (int k = 0; k < n.dim(-p); ++k) {
      HomogeneousMatrix::Column col;
      for (int l = 0; l < n.dim(-p - 1); ++l) {
        std::vector<Term> terms1;
        for (int v = 0; v < n.numVars(); ++v) {
          Coeff a = acts[v].at(k, l);
          if (a != 0) terms1.push_back({Monomial::variable(v), f.mul(sign, a)});
        }
        if (!terms1.empty()) col.push_back({l, RingElem::fromTerms(target, std::move(terms1))});
      }
      m.setColumn(k, std::move(col));
    }
    maps.push_back(std::move(m));
  }
  return FreeComplex(target, -hi, std::move(terms), std::move(maps));
}

}  // namespace

FreeComplex bggOfEModule(const FiniteGradedModule& n, const RingPtr& polynomialRing) {
  if (n.ring()->kind() != RingKind::Exterior) throw InputError("bggOfEModule expects an E-module");
  if (polynomialRing->kind() != RingKind::Polynomial || polynomialRing->numVars() != n.numVars())
    throw InputError("bggOfEModule: target ring must be a polynomial ring on as many variables");
  if (n.isZero()) return FreeComplex(polynomialRing, 0, {{}}, {});
  return dualComplex(n, polynomialRing, n.bottomDegree(), n.topDegree());
}

FreeComplex bggOfEModule(const FiniteGradedModule& n) { return bggOfEModule(n, koszulDualRing(*n.ring())); }

FreeComplex bggOfSModule(const HomogeneousMatrix& presentation, int windowLo, int windowHi,
                         const RingPtr& exteriorRing) {
  if (presentation.ring()->kind() != RingKind::Polynomial) throw InputError("bggOfSModule expects an S-module");
  if (exteriorRing->kind() != RingKind::Exterior || exteriorRing->numVars() != presentation.ring()->numVars())
    throw InputError("bggOfSModule: target ring must be an exterior algebra on as many variables");
  if (windowHi < windowLo) throw InputError("bggOfSModule: empty window");
  const auto& rows = presentation.rowDegrees();
  if (rows.empty()) return FreeComplex(exteriorRing, -windowHi, std::vector<std::vector<int>>(windowHi - windowLo + 1), {});
  const int lo = *std::min_element(rows.begin(), rows.end());
  if (windowHi < lo) throw InputError("bggOfSModule: window contains no generator degree");
  RingPieces pieces(presentation.ring(), windowHi - lo);
  FiniteGradedModule m = cokernelModule(presentation, pieces, windowHi);
  return dualComplex(m, exteriorRing, windowLo, windowHi);
}

std::vector<CohomologyModule> bggCohomology(const FreeComplex& c) {
  std::vector<CohomologyModule> out;
  for (int p = c.start(); p <= c.stop(); ++p) {
    HomogeneousMatrix ker = kernelOfMap(c.mapFrom(p));
    HomogeneousMatrix im = c.mapFrom(p - 1);
    CohomologyModule h;
    h.position = p;
    h.presentation = ker.numCols() == 0 ? HomogeneousMatrix(c.ring(), {}, {})
                                        : minimalPresentation(subquotientPresentation(ker, im));
    out.push_back(std::move(h));
  }
  return out;
}

FiniteGradedModule cohomologyModuleE(const FreeComplex& c, int position) {
  const RingPtr& ring = c.ring();
  if (ring->kind() != RingKind::Exterior) throw InputError("cohomologyModuleE expects a complex over E");
  const auto& gens = c.term(position);
  if (gens.empty()) return FiniteGradedModule(ring, 0, {0});
  RingPieces pieces(ring, ring->numVars());
  const PrimeField& f = ring->field();
  const int lo = *std::min_element(gens.begin(), gens.end());
  const int hi = *std::max_element(gens.begin(), gens.end()) + ring->numVars();
  FiniteGradedModule free = freeModule(pieces, gens, lo, hi);
  HomogeneousMatrix out = c.mapFrom(position), in = c.mapFrom(position - 1);
  GradedSubspace ker;
  ker.lo = lo;
  for (int j = lo; j <= hi; ++j) ker.pieces.push_back(nullspace(f, out.piece(pieces, j)));
  FiniteGradedModule z = submodule(free, ker);
  GradedSubspace im;
  im.lo = lo;
  for (int j = lo; j <= hi; ++j) {
    DenseMatrix m = in.piece(pieces, j);
    std::vector<Vec> vecs;
    const Subspace& kj = ker.pieces[static_cast<std::size_t>(j - lo)];
    for (int col = 0; col < m.cols(); ++col) vecs.push_back(kj.coordinates(m.column(col)));
    im.pieces.push_back(spanOf(f, kj.dim(), vecs));
  }
  return quotientModule(z, im);
}

int regEViaBGG(const FiniteGradedModule& n) {
  if (n.isZero()) return kNegInfinity;
  for (const auto& h : bggCohomology(bggOfEModule(n)))
    if (!h.isZero()) return -h.position;
  throw InvariantError("BGG complex of a nonzero module is exact");
}

int ldExactE(const FiniteGradedModule& n) {
  if (n.isZero()) return kNegInfinity;
  int ld = kNegInfinity;
  for (const auto& h : bggCohomology(bggOfEModule(n))) {
    if (h.isZero()) continue;
    ld = std::max(ld, regS(h.presentation) + h.position);
  }
  if (ld == kNegInfinity) throw InvariantError("BGG complex of a nonzero module is exact");
  return ld;
}

bool bettiVsKoszulCheck(const FiniteGradedModule& n, int maxHomological) {
  if (maxHomological < 1) throw InputError("Betti-Koszul check needs H >= 1");
  BettiTable betti = minimalFreeResolutionE(n, maxHomological).betti();
  if (n.isZero()) return betti.empty();
  FreeComplex c = bggOfEModule(n);
  RingPieces pieces(c.ring(), maxHomological + 1);
  for (const auto& [key, v] : betti.entries()) {
    const int p = key.first - key.second;
    if (key.first <= maxHomological && (p < c.start() || p > c.stop())) return false;
  }
  for (int i = 0; i <= maxHomological; ++i)
    for (int p = c.start(); p <= c.stop(); ++p) {
      const int j = i - p;
      if (betti.at(i, j) != homologyDim(c, pieces, p, j)) return false;
    }
  return true;
}

int ldSViaBGG(const HomogeneousMatrix& presentation) {
  SResolution res = minimalFreeResolutionS(presentation);
  if (res.p0.empty()) return kNegInfinity;
  const int a = *std::min_element(res.p0.begin(), res.p0.end());
  const int lo = a - 1, hi = res.reg + 2;
  HomogeneousMatrix p = res.differentials.empty() ? freePresentation(res.ring, res.p0) : res.differentials.front();
  FreeComplex c = bggOfSModule(p, lo, hi, koszulDualRing(*res.ring));
  int ld = kNegInfinity;
  for (int pos = -hi + 1; pos <= -lo - 1; ++pos) {
    FiniteGradedModule h = cohomologyModuleE(c, pos);
    if (h.isZero()) continue;
    ld = std::max(ld, regEViaBGG(h) + pos);
  }
  if (ld == kNegInfinity) throw InvariantError("BGG complex of a nonzero S-module is exact in the window");
  return ld;
}

}  // namespace koszul
