#include "koszul/resolution_s.hpp"

#include <algorithm>

#include "koszul/errors.hpp"
#include "koszul/groebner.hpp"
#include "koszul/pieces.hpp"

namespace koszul {

namespace {

void requirePolynomial(const GradedRing& r) {
  if (r.kind() != RingKind::Polynomial) throw InputError("expected a module over a polynomial ring");
}

int minOf(const std::vector<int>& v) { return *std::min_element(v.begin(), v.end()); }
int maxOf(const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

const std::vector<int>& SResolution::generatorDegrees(int i) const {
  static const std::vector<int> kEmpty;
  if (i == 0) return p0;
  if (i < 0 || i > length()) return kEmpty;
  return differentials[static_cast<std::size_t>(i - 1)].colDegrees();
}

FreeComplex SResolution::complex() const { return FreeComplex::fromResolution(ring, p0, differentials); }

HomogeneousMatrix freePresentation(const RingPtr& ring, std::vector<int> generatorDegrees) {
  return HomogeneousMatrix(ring, std::move(generatorDegrees), {});
}

HomogeneousMatrix minimalPresentation(const HomogeneousMatrix& presentation) {
  requirePolynomial(*presentation.ring());
  FreeComplex two(presentation.ring(), -1, {presentation.colDegrees(), presentation.rowDegrees()}, {presentation});
  HomogeneousMatrix reduced = minimalize(two).mapFrom(-1);
  return minimalGenerators(reduced);
}

SResolution minimalFreeResolutionS(const HomogeneousMatrix& presentation) {
  SResolution res;
  res.ring = presentation.ring();
  HomogeneousMatrix d = minimalPresentation(presentation);
  res.p0 = d.rowDegrees();
  const int n = res.ring->numVars();
  if (!res.p0.empty()) {
    while (d.numCols() > 0) {
      res.differentials.push_back(d);
      if (res.length() > n) throw InvariantError("resolution over S longer than the number of variables");
      d = kernelOfMap(d);
    }
  }
  // The kernels are minimally generated, so this only re-checks minimality.
  if (!isMinimal(res.complex())) throw InvariantError("resolution over S is not minimal");
  for (int i = 0; i <= res.length(); ++i)
    for (int deg : res.generatorDegrees(i)) res.betti.add(i, deg);
  res.betti.setTruncation({true, res.length(), -1});
  res.reg = res.betti.regularity();
  return res;
}

int regS(const HomogeneousMatrix& presentation) { return minimalFreeResolutionS(presentation).reg; }

bool hasLinearResolutionS(const HomogeneousMatrix& presentation) {
  SResolution res = minimalFreeResolutionS(presentation);
  if (res.p0.empty()) throw InputError("hasLinearResolution: zero module");
  const int iota0 = minOf(res.p0);
  if (maxOf(res.p0) != iota0) throw InputError("hasLinearResolution: module generated in several degrees");
  return res.reg == iota0;
}

HomogeneousMatrix pieceBasisColumns(const HomogeneousMatrix& presentation, int degree) {
  const RingPtr& ring = presentation.ring();
  HomogeneousMatrix out(ring, presentation.rowDegrees(), {});
  if (presentation.numRows() == 0) return out;
  const int lo = minOf(presentation.rowDegrees());
  if (degree < lo) return out;
  RingPieces pieces(ring, degree - lo);
  DenseMatrix img = presentation.piece(pieces, degree);
  auto off = pieceOffsets(pieces, presentation.rowDegrees(), degree);
  IncrementalEchelon ech(ring->field(), off.back());
  for (int c = 0; c < img.cols(); ++c) ech.insert(img.column(c));
  for (int g = 0; g < presentation.numRows(); ++g) {
    const int d = degree - presentation.rowDegree(g);
    for (int k = 0; k < pieces.dim(d); ++k) {
      Vec e(static_cast<std::size_t>(off.back()), 0);
      e[off[g] + k] = 1;
      if (!ech.insert(e)) continue;
      out.appendColumn(degree, {{g, RingElem::fromTerms(ring, {{pieces.basis(d)[k], 1}})}});
    }
  }
  return out;
}

HomogeneousMatrix componentPresentation(const HomogeneousMatrix& presentation, int degree) {
  return imagePresentation(pieceBasisColumns(presentation, degree), presentation);
}

HomogeneousMatrix truncationPresentation(const HomogeneousMatrix& presentation, int degree) {
  HomogeneousMatrix p = minimalPresentation(presentation);
  HomogeneousMatrix gens = pieceBasisColumns(p, degree);
  for (int g = 0; g < p.numRows(); ++g)
    if (p.rowDegree(g) > degree) gens.appendColumn(p.rowDegree(g), {{g, RingElem::constant(p.ring(), 1)}});
  return imagePresentation(gens, p);
}

bool componentwiseLinearS(const HomogeneousMatrix& presentation) {
  SResolution res = minimalFreeResolutionS(presentation);
  if (res.p0.empty()) return true;
  HomogeneousMatrix p = res.differentials.empty() ? freePresentation(res.ring, res.p0) : res.differentials.front();
  const int top = std::max(maxOf(res.p0), res.reg);
  for (int d = minOf(res.p0); d <= top; ++d) {
    SResolution c = minimalFreeResolutionS(componentPresentation(p, d));
    if (c.p0.empty()) continue;
    if (c.reg != d) return false;
  }
  return true;
}

int truncationRegularityS(const HomogeneousMatrix& presentation) {
  SResolution res = minimalFreeResolutionS(presentation);
  if (res.p0.empty()) return kNegInfinity;
  HomogeneousMatrix p = res.differentials.empty() ? freePresentation(res.ring, res.p0) : res.differentials.front();
  for (int i = minOf(res.p0);; ++i) {
    if (regS(truncationPresentation(p, i)) <= i) return i;
    if (i > res.reg + 1) throw InvariantError("truncation regularity did not stabilize");
  }
}

BettiTable linHomologyS(const SResolution& res) {
  BettiTable out;
  if (res.p0.empty()) return out;
  FreeComplex lin = linPart(res.complex());
  const int n = res.ring->numVars();
  int lowest = minOf(res.p0);
  for (int i = 1; i <= res.length(); ++i) lowest = std::min(lowest, minOf(res.generatorDegrees(i)));
  for (int i = 0; i <= res.length(); ++i) {
    const auto& gens = res.generatorDegrees(i);
    HomogeneousMatrix di = lin.differential(i);  // F_i -> F_{i-1}
    HomogeneousMatrix ker = i == 0 ? HomogeneousMatrix(res.ring, gens, gens) : kernelOfMap(di);
    if (i == 0)
      for (int g = 0; g < static_cast<int>(gens.size()); ++g) ker.set(g, g, RingElem::constant(res.ring, 1));
    if (ker.numCols() == 0) continue;
    const int lo = minOf(gens);
    const int ceiling = std::max(maxOf(ker.colDegrees()), maxOf(gens) + n);
    RingPieces pieces(res.ring, ceiling - lowest + 1);
    for (int j = lo; j <= ceiling; ++j) out.add(i, j, homologyDim(lin, pieces, -i, j));
  }
  return out;
}

LdValue ldS(const HomogeneousMatrix& presentation, int maxHomological) {
  if (maxHomological < 0) throw InputError("ld: homological bound must be non-negative");
  SResolution res = minimalFreeResolutionS(presentation);
  LdValue out;
  out.certified = maxHomological >= res.length();
  if (res.p0.empty()) return out;
  BettiTable h = linHomologyS(res);
  out.value = 0;
  for (const auto& [key, v] : h.entries())
    if (key.first <= maxHomological) out.value = std::max(out.value, key.first);
  return out;
}

HomogeneousMatrix syzygyPresentationS(const SResolution& res, int i) {
  if (i < 0) throw InputError("syzygy index must be non-negative");
  if (i < res.length()) return res.differentials[static_cast<std::size_t>(i)];
  return freePresentation(res.ring, res.generatorDegrees(i));
}

int ldViaSyzygiesS(const HomogeneousMatrix& presentation) {
  SResolution res = minimalFreeResolutionS(presentation);
  if (res.p0.empty()) return kNegInfinity;
  for (int i = 0; i <= res.length(); ++i)
    if (componentwiseLinearS(syzygyPresentationS(res, i))) return i;
  throw InvariantError("free module reported as not componentwise linear");
}

}  // namespace koszul
