#include "koszul/degreewise.hpp"

#include <algorithm>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

struct Step {
  std::vector<int> genDegrees;
  std::vector<Vec> genVectors;  // in N's basis, one per generator
};

Step chooseGenerators(const FiniteGradedModule& n) {
  Step s;
  for (int j = n.lo(); j <= n.hi(); ++j) {
    for (int k : minimalGeneratorIndices(n, j)) {
      Vec e(static_cast<std::size_t>(n.dim(j)), 0);
      e[k] = 1;
      s.genDegrees.push_back(j);
      s.genVectors.push_back(std::move(e));
    }
  }
  return s;
}

// Matrix of F_j -> N_j for the free module on the chosen generators.
// images[g][d][k]: image of (basis monomial k of R_d) * generator g.
DenseMatrix coverPiece(const FiniteGradedModule& n, const RingPieces& pieces, const Step& s,
                       std::vector<std::vector<std::vector<Vec>>>& images, int j) {
  const PrimeField& f = n.ring()->field();
  auto off = pieceOffsets(pieces, s.genDegrees, j);
  DenseMatrix m(n.dim(j), off.back());
  for (std::size_t g = 0; g < s.genDegrees.size(); ++g) {
    int d = j - s.genDegrees[g];
    if (d < 0 || pieces.dim(d) == 0) continue;
    auto& byDeg = images[g];
    if (static_cast<int>(byDeg.size()) <= d) byDeg.resize(static_cast<std::size_t>(d + 1));
    if (byDeg[d].empty()) {
      for (int k = 0; k < pieces.dim(d); ++k) {
        if (d == 0) {
          byDeg[0].push_back(s.genVectors[g]);
          continue;
        }
        const auto& fac = pieces.factor(d, k);
        Vec v = n.act(fac.var, j - 1, byDeg[d - 1][fac.rest]);
        if (fac.sign < 0)
          for (Coeff& c : v) c = f.neg(c);
        byDeg[d].push_back(std::move(v));
      }
    }
    for (int k = 0; k < pieces.dim(d); ++k) m.setColumn(off[g] + k, byDeg[d][k]);
  }
  return m;
}

HomogeneousMatrix differentialFromVectors(const RingPieces& pieces, const std::vector<int>& targetDegrees,
                                          const std::vector<int>& sourceDegrees, const std::vector<Vec>& vectors) {
  HomogeneousMatrix d(pieces.ring(), targetDegrees, sourceDegrees);
  for (std::size_t c = 0; c < sourceDegrees.size(); ++c) {
    auto off = pieceOffsets(pieces, targetDegrees, sourceDegrees[c]);
    HomogeneousMatrix::Column col;
    for (std::size_t g = 0; g < targetDegrees.size(); ++g) {
      int deg = sourceDegrees[c] - targetDegrees[g];
      std::span<const Coeff> block(vectors[c].data() + off[g], static_cast<std::size_t>(off[g + 1] - off[g]));
      if (std::all_of(block.begin(), block.end(), [](Coeff x) { return x == 0; })) continue;
      col.push_back({static_cast<int>(g), pieces.element(deg, block)});
    }
    d.setColumn(static_cast<int>(c), std::move(col));
  }
  return d;
}

}  // namespace

DegreewiseResolution resolveDegreewise(const FiniteGradedModule& n, const RingPieces& pieces, int maxHomological,
                                       int maxDegree) {
  if (maxHomological < 0) throw InputError("homological bound must be non-negative");
  DegreewiseResolution res;
  res.ring = n.ring();
  res.maxHomological = maxHomological;
  res.maxDegree = maxDegree;
  const PrimeField& f = n.ring()->field();
  const int top = pieces.ring()->kind() == RingKind::Exterior ? pieces.ring()->numVars() : pieces.maxDegree();

  FiniteGradedModule current = n.truncated(n.lo(), std::min(n.hi(), maxDegree));
  res.syzygies.push_back(current);
  // Basis of `current` inside the previous free module (empty for Ω_0).
  int embeddingLo = 0;
  std::vector<Subspace> embeddingPieces;

  for (int i = 0;; ++i) {
    Step s = chooseGenerators(current);
    if (i > 0) {
      std::vector<Vec> inFree;
      for (std::size_t g = 0; g < s.genDegrees.size(); ++g) {
        const Subspace& sp = embeddingPieces[static_cast<std::size_t>(s.genDegrees[g] - embeddingLo)];
        Vec v(static_cast<std::size_t>(sp.ambient), 0);
        for (int k = 0; k < sp.dim(); ++k) {
          Coeff c = s.genVectors[g][k];
          if (c == 0) continue;
          for (int t = 0; t < sp.ambient; ++t) v[t] = f.add(v[t], f.mul(c, sp.basis[k][t]));
        }
        inFree.push_back(std::move(v));
      }
      res.differentials.push_back(
          differentialFromVectors(pieces, res.generatorDegrees.back(), s.genDegrees, inFree));
    }
    res.generatorDegrees.push_back(s.genDegrees);
    if (s.genDegrees.empty()) {
      res.terminated = true;
      break;
    }
    if (i == maxHomological) break;

    // Kernel of F_i -> current, degree by degree.
    const int lo = *std::min_element(s.genDegrees.begin(), s.genDegrees.end());
    const int hi = std::min(maxDegree, *std::max_element(s.genDegrees.begin(), s.genDegrees.end()) + top);
    FiniteGradedModule free = freeModule(pieces, s.genDegrees, lo, hi);
    std::vector<std::vector<std::vector<Vec>>> images(s.genDegrees.size());
    GradedSubspace kernel;
    kernel.lo = lo;
    for (int j = lo; j <= hi; ++j) kernel.pieces.push_back(nullspace(f, coverPiece(current, pieces, s, images, j)));
    current = submodule(free, kernel);
    embeddingLo = lo;
    embeddingPieces = kernel.pieces;
    res.syzygies.push_back(current);
    if (current.isZero()) {
      res.terminated = true;
      break;
    }
  }
  return res;
}

FreeComplex DegreewiseResolution::complex() const {
  return FreeComplex::fromResolution(ring, generatorDegrees.front(), differentials);
}

BettiTable DegreewiseResolution::betti() const {
  BettiTable t;
  for (std::size_t i = 0; i < generatorDegrees.size(); ++i)
    for (int d : generatorDegrees[i]) t.add(static_cast<int>(i), d);
  BettiTable::Truncation tr;
  // Over an infinite ring the kernels were only computed up to maxDegree.
  tr.complete = terminated && ring->kind() == RingKind::Exterior;
  tr.maxHomological = maxHomological;
  tr.maxDegree = ring->kind() == RingKind::Exterior ? -1 : maxDegree;
  t.setTruncation(tr);
  return t;
}

BettiTable linearPartHomology(const DegreewiseResolution& res, const RingPieces& pieces) {
  BettiTable out;
  FreeComplex lin = linPart(res.complex());
  const int top = pieces.ring()->kind() == RingKind::Exterior ? pieces.ring()->numVars() : pieces.maxDegree();
  const int last = res.terminated ? res.length() : res.length() - 1;
  for (int i = 0; i <= last; ++i) {
    const auto& gens = res.generatorDegrees[static_cast<std::size_t>(i)];
    if (gens.empty()) continue;
    const int lo = *std::min_element(gens.begin(), gens.end());
    const int hi = std::min(res.maxDegree, *std::max_element(gens.begin(), gens.end()) + top);
    for (int j = lo; j <= hi; ++j) out.add(i, j, homologyDim(lin, pieces, -i, j));
  }
  return out;
}

}  // namespace koszul
