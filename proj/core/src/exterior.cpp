#include "koszul/exterior.hpp"

#include <algorithm>

#include "koszul/bgg.hpp"
#include "koszul/errors.hpp"
#include <limits>

namespace koszul {

namespace {

void requireExterior(const GradedRing& r) {
  if (r.kind() != RingKind::Exterior) throw InputError("expected a module over an exterior algebra");
}

RingPieces exteriorPieces(const RingPtr& ring) { return RingPieces(ring, ring->numVars()); }

}  // namespace

FiniteGradedModule realizeEModule(const HomogeneousMatrix& presentation) {
  requireExterior(*presentation.ring());
  RingPieces pieces = exteriorPieces(presentation.ring());
  if (presentation.numRows() == 0) return FiniteGradedModule(presentation.ring(), 0, {0});
  const auto& rows = presentation.rowDegrees();
  const int hi = *std::max_element(rows.begin(), rows.end()) + presentation.ring()->numVars();
  return cokernelModule(presentation, pieces, hi);
}

DegreewiseResolution minimalFreeResolutionE(const FiniteGradedModule& n, int maxHomological) {
  requireExterior(*n.ring());
  RingPieces pieces = exteriorPieces(n.ring());
  return resolveDegreewise(n, pieces, maxHomological, std::numeric_limits<int>::max() / 2);
}

BettiTable linHomologyE(const FiniteGradedModule& n, int maxHomological) {
  DegreewiseResolution res = minimalFreeResolutionE(n, maxHomological);
  BettiTable h = linearPartHomology(res, exteriorPieces(n.ring()));
  BettiTable out;
  for (const auto& [key, v] : h.entries())
    if (key.first < maxHomological) out.add(key.first, key.second, v);
  return out;
}

int ldLowerBoundE(const FiniteGradedModule& n, int maxHomological) {
  if (maxHomological < 1) throw InputError("ld lower bound needs H >= 1");
  if (n.isZero()) return kNegInfinity;
  int ld = 0;
  const BettiTable lin = linHomologyE(n, maxHomological);
  for (const auto& [key, v] : lin.entries()) ld = std::max(ld, key.first);
  return ld;
}

FiniteGradedModule syzygyE(const FiniteGradedModule& n, int i) {
  if (i < 0) throw InputError("syzygy index must be non-negative");
  DegreewiseResolution res = minimalFreeResolutionE(n, i);
  if (i < static_cast<int>(res.syzygies.size())) return res.syzygies[static_cast<std::size_t>(i)];
  return FiniteGradedModule(n.ring(), 0, {0});
}

FiniteGradedModule cosyzygy(const FiniteGradedModule& n, int i) {
  if (i < 1) throw InputError("cosyzygy index must be at least 1");
  return dualModule(syzygyE(dualModule(n), i));
}

bool componentwiseLinearE(const FiniteGradedModule& n) {
  requireExterior(*n.ring());
  for (int d = n.lo(); d <= n.hi(); ++d) {
    if (n.dim(d) == 0) continue;
    if (regEViaBGG(componentSubmodule(n, d)) != d) return false;
  }
  return true;
}

int ldViaSyzygiesE(const FiniteGradedModule& n, int maxHomological) {
  DegreewiseResolution res = minimalFreeResolutionE(n, maxHomological);
  for (std::size_t i = 0; i < res.syzygies.size(); ++i)
    if (res.syzygies[i].isZero() || componentwiseLinearE(res.syzygies[i])) return static_cast<int>(i);
  return -1;
}

StabilizedRegularity directRegE(const FiniteGradedModule& n, int maxHomological) {
  StabilizedRegularity out;
  if (n.isZero()) {
    out.stabilized = true;
    return out;
  }
  const int top = n.topDegree();
  DegreewiseResolution res = minimalFreeResolutionE(n, maxHomological);
  std::vector<int> strand;
  for (int i = 0; i <= res.length(); ++i) {
    const auto& g = res.generatorDegrees[static_cast<std::size_t>(i)];
    if (g.empty()) break;
    strand.push_back(*std::max_element(g.begin(), g.end()) - i);
    out.value = std::max(out.value, strand.back());
    out.steps = i;
    // reg_E(N) never exceeds the top degree of N.
    if (out.value >= top) {
      out.stabilized = true;
      return out;
    }
    if (i >= 2 && strand[i] == strand[i - 1] && strand[i - 1] == strand[i - 2]) {
      out.stabilized = true;
      return out;
    }
  }
  out.stabilized = res.terminated;
  return out;
}

}  // namespace koszul
