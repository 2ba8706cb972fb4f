#include "generators.hpp"

#include <algorithm>

#include "koszul/exterior.hpp"
#include "koszul/groebner.hpp"

namespace koszul::testing {

namespace {

std::vector<std::string> names(const char* prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Monomial fromSupport(std::uint32_t mask, int n) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1U) e[static_cast<std::size_t>(i)] = 1;
  return Monomial::fromExponents(e);
}

bool isAntichain(const std::vector<std::uint32_t>& masks) {
  for (std::uint32_t a : masks)
    for (std::uint32_t b : masks)
      if (a != b && (a & b) == a) return false;
  return true;
}

}  // namespace

RingPtr polyRing(int n, std::uint32_t p) { return GradedRing::polynomial(PrimeField(p), names("x", n)); }
RingPtr extRing(int n, std::uint32_t p) { return GradedRing::exterior(PrimeField(p), names("y", n)); }

RingElem randomElement(Rng& rng, const RingPtr& ring, int degree, double density) {
  const auto basis = ring->pieceBasis(degree);
  if (basis.empty()) return RingElem(ring);
  std::vector<Term> terms;
  for (const auto& m : basis)
    if (rng.coin(density)) terms.push_back({m, rng.coeff(ring->field())});
  if (terms.empty()) terms.push_back({basis[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(basis.size()) - 1))],
                                      rng.coeff(ring->field())});
  return RingElem::fromTerms(ring, terms);
}

HomogeneousMatrix randomPresentation(Rng& rng, const RingPtr& ring, int maxGens, int maxRels, int maxEntryDeg) {
  const int gens = rng.uniform(1, maxGens);
  std::vector<int> rows;
  for (int g = 0; g < gens; ++g) rows.push_back(rng.uniform(0, 1));
  HomogeneousMatrix m(ring, rows, {});
  const int rels = rng.uniform(1, maxRels);
  for (int c = 0; c < rels; ++c) {
    const int deg = 1 + rng.uniform(1, maxEntryDeg);
    HomogeneousMatrix::Column col;
    for (int g = 0; g < gens; ++g) {
      if (deg - rows[static_cast<std::size_t>(g)] < 1 || !rng.coin(0.7)) continue;
      RingElem e = randomElement(rng, ring, deg - rows[static_cast<std::size_t>(g)], 0.4);
      if (!e.isZero()) col.push_back({g, e});
    }
    m.appendColumn(deg, col);
  }
  return m;
}

FiniteGradedModule randomEModule(Rng& rng, int n, int maxDim) {
  RingPtr e = extRing(n);
  for (;;) {
    FiniteGradedModule mod = realizeEModule(randomPresentation(rng, e, 2, 3, 2));
    if (mod.isZero() || mod.maxPieceDim() > maxDim) continue;
    return mod;
  }
}

HomogeneousMatrix monomialQuotient(const RingPtr& ring, const std::vector<std::uint32_t>& generators) {
  HomogeneousMatrix m(ring, {0}, {});
  for (std::uint32_t g : generators) {
    Monomial mono = fromSupport(g, ring->numVars());
    m.appendColumn(mono.degree(), {{0, RingElem::fromTerms(ring, {{mono, 1}})}});
  }
  return m;
}

std::vector<std::vector<std::uint32_t>> allSquarefreeMonomialIdeals(int n) {
  const std::uint32_t faces = (1U << n) - 1;  // nonempty subsets 1..2^n-1
  std::vector<std::vector<std::uint32_t>> out;
  // Subsets of the face set, pruned to antichains.
  const std::uint64_t total = 1ULL << faces;
  for (std::uint64_t pick = 1; pick < total; ++pick) {
    std::vector<std::uint32_t> gens;
    for (std::uint32_t f = 0; f < faces; ++f)
      if (pick >> f & 1ULL) gens.push_back(f + 1);
    if (isAntichain(gens)) out.push_back(std::move(gens));
  }
  return out;
}

std::vector<std::uint32_t> randomSquarefreeMonomialIdeal(Rng& rng, int n) {
  std::vector<std::uint32_t> gens;
  const int count = rng.uniform(1, 2 * n);
  for (int k = 0; k < count; ++k) {
    const std::uint32_t f = static_cast<std::uint32_t>(rng.uniform(1, (1 << n) - 1));
    if (std::popcount(f) == 1 && rng.coin(0.7)) continue;  // favour degree >= 2
    bool redundant = false;
    for (std::uint32_t g : gens) redundant = redundant || (g & f) == g;
    if (redundant) continue;
    std::erase_if(gens, [f](std::uint32_t g) { return (g & f) == f; });
    gens.push_back(f);
  }
  if (gens.empty()) gens.push_back((1U << n) - 1);
  std::sort(gens.begin(), gens.end());
  return gens;
}

HomogeneousMatrix randomLinearSubmodule(Rng& rng, const RingPtr& s, int c, int gens) {
  HomogeneousMatrix m(s, std::vector<int>(static_cast<std::size_t>(c), 0), {});
  for (int k = 0; k < gens; ++k) {
    HomogeneousMatrix::Column col;
    for (int r = 0; r < c; ++r) {
      if (!rng.coin(0.6)) continue;
      col.push_back({r, randomElement(rng, s, 1, 0.5)});
    }
    if (col.empty()) col.push_back({rng.uniform(0, c - 1), randomElement(rng, s, 1, 0.5)});
    m.appendColumn(1, col);
  }
  return submodulePresentation(m);
}

}  // namespace koszul::testing
