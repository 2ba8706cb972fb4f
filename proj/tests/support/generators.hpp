#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "koszul/graded_module.hpp"
#include "koszul/matrix.hpp"
#include "koszul/ring.hpp"

namespace koszul::testing {

/// Seeded source for every randomized test; draws are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }
  Coeff coeff(const PrimeField& f) { return f.fromInt(uniform(1, static_cast<int>(f.characteristic()) - 1)); }

 private:
  std::mt19937_64 gen_;
};

RingPtr polyRing(int n, std::uint32_t p = 32003);
RingPtr extRing(int n, std::uint32_t p = 32003);

/// Homogeneous element of the given degree; each basis monomial appears with
/// probability `density` (at least one term when the piece is nonzero).
RingElem randomElement(Rng& rng, const RingPtr& ring, int degree, double density = 0.5);

/// Random presentation over `ring`: 1..maxGens generators in degrees 0..1,
/// 1..maxRels relations of degree (row degree) + 1..maxEntryDeg.
HomogeneousMatrix randomPresentation(Rng& rng, const RingPtr& ring, int maxGens, int maxRels, int maxEntryDeg);

/// A nonzero E-module with every graded piece of dimension <= maxDim.
FiniteGradedModule randomEModule(Rng& rng, int n, int maxDim = 4);

/// Presentation of E/I or S/I for monomials given as support bitmasks.
HomogeneousMatrix monomialQuotient(const RingPtr& ring, const std::vector<std::uint32_t>& generators);

/// All antichains of nonempty subsets of {0..n-1}, excluding the empty one
/// (the squarefree monomial ideals I ≠ 0, 1 ∉ I).
std::vector<std::vector<std::uint32_t>> allSquarefreeMonomialIdeals(int n);
std::vector<std::uint32_t> randomSquarefreeMonomialIdeal(Rng& rng, int n);

/// Submodule of S^c generated by `gens` random linear vectors, as a
/// presentation on those generators.
HomogeneousMatrix randomLinearSubmodule(Rng& rng, const RingPtr& s, int c, int gens);

}  // namespace koszul::testing
