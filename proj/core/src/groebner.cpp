#include "koszul/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

#include "koszul/errors.hpp"

namespace koszul {

int compareModuleTerms(const ModuleTerm& a, const ModuleTerm& b) {
  if (a.row != b.row) return a.row < b.row ? 1 : -1;
  return compareDegRevLex(a.mono, b.mono);
}

namespace {

bool greater(const ModuleTerm& a, const ModuleTerm& b) { return compareModuleTerms(a, b) > 0; }

void requirePolynomial(const GradedRing& r, const char* what) {
  if (r.kind() != RingKind::Polynomial) throw InputError(std::string(what) + " requires a polynomial ring");
}

// f[from..] - c * m * g, merged in decreasing order.
ModuleVector subtractMultiple(const PrimeField& field, const ModuleVector& f, std::size_t from, Coeff c,
                              const Monomial& m, const ModuleVector& g) {
  ModuleVector out;
  out.reserve(f.size() - from + g.size());
  std::size_t a = from, b = 0;
  while (a < f.size() || b < g.size()) {
    if (b == g.size()) {
      out.push_back(f[a++]);
      continue;
    }
    ModuleTerm t{g[b].mono * m, g[b].row, field.neg(field.mul(c, g[b].coeff))};
    if (a == f.size()) {
      out.push_back(t);
      ++b;
      continue;
    }
    int cmp = compareModuleTerms(f[a], t);
    if (cmp > 0) {
      out.push_back(f[a++]);
    } else if (cmp < 0) {
      out.push_back(t);
      ++b;
    } else {
      Coeff s = field.add(f[a].coeff, t.coeff);
      if (s != 0) out.push_back({t.mono, t.row, s});
      ++a;
      ++b;
    }
  }
  return out;
}

ModuleVector scaled(const PrimeField& field, ModuleVector v, Coeff c) {
  for (auto& t : v) t.coeff = field.mul(t.coeff, c);
  return v;
}

ModuleVector makeMonic(const PrimeField& field, ModuleVector v) {
  if (v.empty()) return v;
  const Coeff inv = field.inv(v.front().coeff);
  return scaled(field, std::move(v), inv);
}

}  // namespace

ModuleVector columnVector(const HomogeneousMatrix& m, int col) {
  ModuleVector v;
  for (const auto& e : m.column(col))
    for (const Term& t : e.value.terms()) v.push_back({t.mono, e.row, t.coeff});
  std::sort(v.begin(), v.end(), greater);
  return v;
}

HomogeneousMatrix::Column vectorColumn(const RingPtr& ring, const ModuleVector& v, int numRows) {
  std::vector<std::vector<Term>> byRow(static_cast<std::size_t>(numRows));
  for (const auto& t : v) byRow[t.row].push_back({t.mono, t.coeff});
  HomogeneousMatrix::Column col;
  for (int r = 0; r < numRows; ++r)
    if (!byRow[r].empty()) col.push_back({r, RingElem::fromTerms(ring, std::move(byRow[r]))});
  return col;
}

HomogeneousMatrix GBasis::matrix() const {
  HomogeneousMatrix m(ring_, rowDegs_, degs_);
  for (int c = 0; c < size(); ++c) m.setColumn(c, vectorColumn(ring_, elems_[c], static_cast<int>(rowDegs_.size())));
  return m;
}

int GBasis::findReducer(const ModuleTerm& t) const {
  if (t.row >= static_cast<int>(byRow_.size())) return -1;
  for (int idx : byRow_[t.row])
    if (elems_[idx].front().mono.divides(t.mono)) return idx;
  return -1;
}

void GBasis::add(ModuleVector v, int degree) {
  if (v.empty()) return;
  const int row = v.front().row;
  if (static_cast<int>(byRow_.size()) <= row) byRow_.resize(static_cast<std::size_t>(row + 1));
  byRow_[row].push_back(size());
  elems_.push_back(makeMonic(ring_->field(), std::move(v)));
  degs_.push_back(degree);
}

void GBasis::interreduce() {
  const PrimeField& field = ring_->field();
  for (int k = 0; k < size(); ++k) {
    ModuleVector& f = elems_[k];
    ModuleVector result{f.front()};
    ModuleVector rest(f.begin() + 1, f.end());
    std::size_t pos = 0;
    while (pos < rest.size()) {
      int r = findReducer(rest[pos]);
      if (r < 0 || r == k) {
        result.push_back(rest[pos++]);
        continue;
      }
      const ModuleVector& g = elems_[r];
      rest = subtractMultiple(field, rest, pos, rest[pos].coeff, rest[pos].mono / g.front().mono, g);
      pos = 0;
    }
    f = std::move(result);
  }
  std::vector<int> order(static_cast<std::size_t>(size()));
  for (int k = 0; k < size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (degs_[a] != degs_[b]) return degs_[a] < degs_[b];
    return compareModuleTerms(elems_[a].front(), elems_[b].front()) < 0;
  });
  std::vector<ModuleVector> elems;
  std::vector<int> degs;
  for (int k : order) {
    elems.push_back(std::move(elems_[k]));
    degs.push_back(degs_[k]);
  }
  elems_.clear();
  degs_.clear();
  byRow_.clear();
  for (std::size_t k = 0; k < elems.size(); ++k) add(std::move(elems[k]), degs[k]);
}

ModuleVector normalForm(const ModuleVector& f, const GBasis& g, std::vector<ReductionStep>* steps) {
  const PrimeField& field = g.ring()->field();
  ModuleVector result;
  ModuleVector rest = f;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    int r = g.findReducer(rest[pos]);
    if (r < 0) {
      result.push_back(rest[pos++]);
      continue;
    }
    const ModuleVector& h = g.elements()[r];
    Monomial q = rest[pos].mono / h.front().mono;
    Coeff c = rest[pos].coeff;  // elements are monic
    if (steps) steps->push_back({r, q, c});
    rest = subtractMultiple(field, rest, pos, c, q, h);
    pos = 0;
  }
  return result;
}

namespace {

struct Pair {
  int degree;
  int i, j;
  Monomial lcm;
};

}  // namespace

BuchbergerResult buchbergerWithGenerators(const HomogeneousMatrix& gens) {
  requirePolynomial(*gens.ring(), "buchberger");
  const PrimeField& field = gens.ring()->field();
  const bool ideal = gens.numRows() == 1;
  BuchbergerResult out{GBasis(gens.ring(), gens.rowDegrees()), {}};
  GBasis& g = out.basis;

  std::vector<int> inputs;
  for (int c = 0; c < gens.numCols(); ++c)
    if (!gens.column(c).empty()) inputs.push_back(c);
  std::stable_sort(inputs.begin(), inputs.end(), [&](int a, int b) { return gens.colDegree(a) < gens.colDegree(b); });

  auto pairLess = [](const Pair& a, const Pair& b) { return std::tie(a.degree, a.j, a.i) < std::tie(b.degree, b.j, b.i); };
  std::vector<Pair> pairs;

  auto addElement = [&](ModuleVector v, int degree) {
    const int k = g.size();
    g.add(std::move(v), degree);
    const ModuleTerm& lead = g.elements()[k].front();
    for (int i = 0; i < k; ++i) {
      const ModuleTerm& other = g.elements()[i].front();
      if (other.row != lead.row) continue;
      if (ideal && other.mono.coprimeTo(lead.mono)) continue;
      Monomial l = other.mono.lcm(lead.mono);
      pairs.push_back({l.degree() + gens.rowDegree(lead.row), i, k, l});
    }
    std::sort(pairs.begin(), pairs.end(), pairLess);
  };

  auto chainSkips = [&](const Pair& p) {
    const int row = g.elements()[p.i].front().row;
    const Monomial& li = g.elements()[p.i].front().mono;
    const Monomial& lj = g.elements()[p.j].front().mono;
    for (int k = 0; k < g.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const ModuleTerm& lk = g.elements()[k].front();
      if (lk.row != row || !lk.mono.divides(p.lcm)) continue;
      if (li.lcm(lk.mono) == p.lcm || lj.lcm(lk.mono) == p.lcm) continue;
      return true;
    }
    return false;
  };

  std::size_t nextInput = 0;
  while (!pairs.empty() || nextInput < inputs.size()) {
    int degree = std::numeric_limits<int>::max();
    if (!pairs.empty()) degree = pairs.front().degree;
    if (nextInput < inputs.size()) degree = std::min(degree, gens.colDegree(inputs[nextInput]));

    while (!pairs.empty() && pairs.front().degree == degree) {
      Pair p = pairs.front();
      pairs.erase(pairs.begin());
      if (chainSkips(p)) continue;
      const ModuleVector& gi = g.elements()[p.i];
      const ModuleVector& gj = g.elements()[p.j];
      ModuleVector s = subtractMultiple(field, ModuleVector{}, 0, field.neg(1), p.lcm / gi.front().mono, gi);
      s = subtractMultiple(field, s, 0, 1, p.lcm / gj.front().mono, gj);
      ModuleVector r = normalForm(s, g);
      if (!r.empty()) addElement(std::move(r), degree);
    }
    while (nextInput < inputs.size() && gens.colDegree(inputs[nextInput]) == degree) {
      const int c = inputs[nextInput++];
      ModuleVector r = normalForm(columnVector(gens, c), g);
      if (r.empty()) continue;
      out.minimalInputs.push_back(c);
      addElement(std::move(r), degree);
    }
  }
  std::sort(out.minimalInputs.begin(), out.minimalInputs.end());
  g.interreduce();
  return out;
}

GBasis buchberger(const HomogeneousMatrix& gens) { return buchbergerWithGenerators(gens).basis; }

HomogeneousMatrix syzygies(const GBasis& g) {
  const PrimeField& field = g.ring()->field();
  const auto& el = g.elements();
  HomogeneousMatrix out(g.ring(), g.degrees(), {});
  for (int j = 0; j < g.size(); ++j) {
    const ModuleTerm& lj = el[j].front();
    // Keep (i, j) when lcm/lm_j is a minimal generator of the quotient ideal
    // (lm_i : lm_j), i < j; ties go to the smallest i.
    std::vector<std::pair<int, Monomial>> cands;
    for (int i = 0; i < j; ++i) {
      if (el[i].front().row != lj.row) continue;
      cands.emplace_back(i, el[i].front().mono.lcm(lj.mono) / lj.mono);
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = true;
      for (std::size_t b = 0; b < cands.size() && keep; ++b) {
        if (a == b || !cands[b].second.divides(cands[a].second)) continue;
        if (!(cands[b].second == cands[a].second) || b < a) keep = false;
      }
      if (!keep) continue;
      const int i = cands[a].first;
      const Monomial l = el[i].front().mono.lcm(lj.mono);
      const Monomial qi = l / el[i].front().mono, qj = l / lj.mono;
      ModuleVector s = subtractMultiple(field, ModuleVector{}, 0, field.neg(1), qi, el[i]);
      s = subtractMultiple(field, s, 0, 1, qj, el[j]);
      std::vector<ReductionStep> steps;
      ModuleVector rem = normalForm(s, g, &steps);
      if (!rem.empty()) throw InvariantError("syzygies: input is not a Gröbner basis");
      std::map<int, std::vector<Term>> entries;
      entries[i].push_back({qi, 1});
      entries[j].push_back({qj, field.neg(1)});
      for (const auto& st : steps) entries[st.index].push_back({st.mono, field.neg(st.coeff)});
      HomogeneousMatrix::Column col;
      for (auto& [row, terms] : entries) {
        RingElem e = RingElem::fromTerms(g.ring(), std::move(terms));
        if (!e.isZero()) col.push_back({row, e});
      }
      out.appendColumn(l.degree() + g.rowDegrees()[lj.row], std::move(col));
    }
  }
  return out;
}

HomogeneousMatrix concatColumns(const HomogeneousMatrix& a, const HomogeneousMatrix& b) {
  if (a.rowDegrees() != b.rowDegrees()) throw InputError("concatColumns: row degrees differ");
  HomogeneousMatrix out = a;
  for (int c = 0; c < b.numCols(); ++c) out.appendColumn(b.colDegree(c), b.column(c));
  return out;
}

HomogeneousMatrix minimalGenerators(const HomogeneousMatrix& gens) {
  auto res = buchbergerWithGenerators(gens);
  std::vector<int> rows(static_cast<std::size_t>(gens.numRows()));
  for (int r = 0; r < gens.numRows(); ++r) rows[r] = r;
  return gens.select(rows, res.minimalInputs);
}

HomogeneousMatrix kernelOfMap(const HomogeneousMatrix& phi) {
  requirePolynomial(*phi.ring(), "kernelOfMap");
  const int m = phi.numRows(), n = phi.numCols();
  std::vector<int> rows = phi.rowDegrees();
  rows.insert(rows.end(), phi.colDegrees().begin(), phi.colDegrees().end());
  HomogeneousMatrix aug(phi.ring(), rows, phi.colDegrees());
  for (int c = 0; c < n; ++c) {
    HomogeneousMatrix::Column col = phi.column(c);
    col.push_back({m + c, RingElem::constant(phi.ring(), 1)});
    aug.setColumn(c, std::move(col));
  }
  GBasis g = buchberger(aug);
  HomogeneousMatrix ker(phi.ring(), phi.colDegrees(), {});
  for (int k = 0; k < g.size(); ++k) {
    const ModuleVector& v = g.elements()[k];
    if (v.front().row < m) continue;
    ModuleVector shifted = v;
    for (auto& t : shifted) t.row -= m;
    ker.appendColumn(g.degrees()[k], vectorColumn(phi.ring(), shifted, n));
  }
  return minimalGenerators(ker);
}

HomogeneousMatrix imagePresentation(const HomogeneousMatrix& gens, const HomogeneousMatrix& rels) {
  HomogeneousMatrix k = kernelOfMap(concatColumns(gens, rels));
  std::vector<int> keep(static_cast<std::size_t>(gens.numCols()));
  for (int r = 0; r < gens.numCols(); ++r) keep[r] = r;
  std::vector<int> cols(static_cast<std::size_t>(k.numCols()));
  for (int c = 0; c < k.numCols(); ++c) cols[c] = c;
  HomogeneousMatrix p = k.select(keep, cols);
  return minimalGenerators(p);
}

HomogeneousMatrix subquotientPresentation(const HomogeneousMatrix& ker, const HomogeneousMatrix& im) {
  GBasis g = buchberger(ker);
  for (int c = 0; c < im.numCols(); ++c)
    if (!normalForm(columnVector(im, c), g).empty())
      throw InputError("subquotientPresentation: image is not contained in the kernel span");
  return imagePresentation(ker, im);
}

HomogeneousMatrix submodulePresentation(const HomogeneousMatrix& gens) { return kernelOfMap(gens); }

}  // namespace koszul
