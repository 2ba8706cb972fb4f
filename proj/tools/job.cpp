#include "job.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>

#include "koszul/bgg.hpp"
#include "koszul/errors.hpp"
#include "koszul/exterior.hpp"
#include "koszul/quotient.hpp"
#include "koszul/resolution_s.hpp"

namespace koszul::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kCommands = {"betti",        "reg",       "ld",
                                         "lin-homology", "koszul-check", "cohomology",
                                         "componentwise-linear", "ae-check", "golod"};
const std::set<std::string> kModuleFree = {"koszul-check", "golod"};

bool isIdentifierStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentifierChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

[[noreturn]] void syntaxError(const std::string& text, std::size_t pos, const std::string& what) {
  throw InputError("syntax error at position " + std::to_string(pos) + " in \"" + text + "\": " + what);
}

class ElementParser {
 public:
  ElementParser(const std::string& text, const RingPtr& ring) : text_(text), ring_(ring) {}

  RingElem parse() {
    RingElem sum(ring_);
    skipSpace();
    if (pos_ == text_.size()) syntaxError(text_, pos_, "empty element");
    bool first = true;
    int degree = -1;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skipSpace();
      } else if (!first) {
        syntaxError(text_, pos_, "expected + or -");
      }
      const std::size_t termStart = pos_;
      auto [term, termDegree] = parseTerm();
      if (degree >= 0 && termDegree != degree)
        throw InputError("inhomogeneous entry \"" + text_ + "\": term at position " + std::to_string(termStart) +
                         " has degree " + std::to_string(termDegree) + ", expected " + std::to_string(degree));
      degree = termDegree;
      sum = negative ? sum - term : sum + term;
      first = false;
      skipSpace();
    }
    return sum;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::int64_t parseNumber() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000'000LL) syntaxError(text_, start, "number too large");
      ++pos_;
    }
    if (pos_ == start) syntaxError(text_, pos_, "expected a number");
    return v;
  }

  RingElem parseFactor(int& degree) {
    const std::size_t start = pos_;
    if (!isIdentifierStart(peek())) syntaxError(text_, pos_, "expected a variable");
    while (isIdentifierChar(peek())) ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    const auto& vars = ring_->varNames();
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw InputError("unknown variable \"" + name + "\" at position " + std::to_string(start) +
                                           " in \"" + text_ + "\"");
    std::int64_t exp = 1;
    skipSpace();
    if (peek() == '^') {
      ++pos_;
      skipSpace();
      const std::size_t expPos = pos_;
      exp = parseNumber();
      if (exp < 1 || exp > 255) syntaxError(text_, expPos, "exponent must lie in 1..255");
    }
    RingElem v = RingElem::variable(ring_, static_cast<int>(it - vars.begin()));
    RingElem out = v;
    for (std::int64_t k = 1; k < exp; ++k) out = out * v;
    degree += static_cast<int>(exp);
    return out;
  }

  std::pair<RingElem, int> parseTerm() {
    const PrimeField& f = ring_->field();
    Coeff coeff = 1;
    bool haveCoeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = f.fromInt(parseNumber());
      haveCoeff = true;
      skipSpace();
      if (peek() == '*') {
        ++pos_;
        skipSpace();
        if (!isIdentifierStart(peek())) syntaxError(text_, pos_, "expected a variable after *");
      }
    }
    int degree = 0;
    RingElem term = RingElem::constant(ring_, 1);
    if (isIdentifierStart(peek())) {
      term = parseFactor(degree);
      skipSpace();
      while (peek() == '*') {
        ++pos_;
        skipSpace();
        term = term * parseFactor(degree);
        skipSpace();
      }
    } else if (!haveCoeff) {
      syntaxError(text_, pos_, "expected a coefficient or a variable");
    }
    return {term.scaled(coeff), degree};
  }

  const std::string& text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

template <class T>
T field(const json& j, const char* key, const char* where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field \"") + key + "\" in " + where + ": " + e.what());
  }
}

template <class T>
std::optional<T> optionalField(const json& j, const char* key, const char* where) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key, where);
}

int defaultH(const JobSpec& spec) { return spec.maxH.value_or(defaultTruncationE(static_cast<int>(spec.ring.vars.size()))); }

json intOrNull(int v) { return v == kNegInfinity ? json(nullptr) : json(v); }

json tableJson(const BettiTable& t) {
  json out = json::array();
  for (const auto& [key, v] : t.entries()) out.push_back({key.first, key.second, v});
  return out;
}

std::string valueText(int v) { return v == kNegInfinity ? "-inf" : std::to_string(v); }

struct Context {
  const JobSpec& spec;
  RingPtr ring;
  HomogeneousMatrix pres;
  RingKind kind;
};

void requireKind(const Context& c, std::initializer_list<RingKind> allowed) {
  for (RingKind k : allowed)
    if (c.kind == k) return;
  throw InputError("command \"" + c.spec.command + "\" is not available for ring kind \"" + c.spec.ring.kind + "\"");
}

Report runBetti(const Context& c) {
  Report r;
  BettiTable table;
  if (c.kind == RingKind::Polynomial) {
    SResolution res = minimalFreeResolutionS(c.pres);
    table = res.betti;
    r.truncationH = res.length();
  } else if (c.kind == RingKind::Exterior) {
    const int h = defaultH(c.spec);
    DegreewiseResolution res = minimalFreeResolutionE(realizeEModule(c.pres), h);
    table = res.betti();
    r.truncationH = h;
    r.certified = res.terminated;
  } else {
    const int h = defaultH(c.spec);
    TruncatedAResolution res = minimalResolutionA(c.pres, h, c.spec.maxDeg.value_or(-1), c.spec.forceBounds);
    table = res.betti;
    r.truncationH = res.maxHomological;
    r.truncationD = res.maxDegree;
    r.certified = false;
  }
  r.result = {{"betti", tableJson(table)}, {"regularity", intOrNull(table.regularity())}};
  r.table = table.toMacaulayString();
  return r;
}

Report runReg(const Context& c) {
  Report r;
  if (c.kind == RingKind::Polynomial) {
    const int reg = regS(c.pres);
    r.result = {{"reg", intOrNull(reg)}, {"certified", true}, {"method", "direct"}};
  } else if (c.kind == RingKind::Exterior) {
    FiniteGradedModule n = realizeEModule(c.pres);
    const std::string& m = c.spec.method;
    r.result = {{"method", m}};
    if (m == "bgg" || m == "both") r.result["bgg"] = intOrNull(regEViaBGG(n));
    if (m == "direct" || m == "both") {
      const int h = defaultH(c.spec);
      StabilizedRegularity s = directRegE(n, h);
      r.result["direct"] = intOrNull(s.value);
      r.result["stabilized"] = s.stabilized;
      r.truncationH = h;
    }
    if (m == "both") r.result["methods_agree"] = r.result["bgg"] == r.result["direct"];
    r.result["reg"] = m == "direct" ? r.result["direct"] : r.result["bgg"];
    r.certified = m != "direct";
    r.result["certified"] = r.certified;
  } else {
    const int h = defaultH(c.spec);
    TruncatedAResolution res = minimalResolutionA(c.pres, h, c.spec.maxDeg.value_or(-1), c.spec.forceBounds);
    r.truncationH = res.maxHomological;
    r.truncationD = res.maxDegree;
    r.certified = false;
    r.result = {{"reg", intOrNull(res.betti.regularity())}, {"certified", false}, {"method", "direct"}};
  }
  r.table = "reg: " + (r.result["reg"].is_null() ? std::string("-inf") : r.result["reg"].dump()) + "\n";
  return r;
}

Report runLd(const Context& c) {
  Report r;
  const std::string& m = c.spec.method;
  r.result = {{"method", m}};
  if (c.kind == RingKind::Polynomial) {
    if (m == "direct" || m == "both") {
      const int h = c.spec.maxH.value_or(c.ring->numVars());
      LdValue v = ldS(c.pres, h);
      r.result["direct"] = intOrNull(v.value);
      r.truncationH = h;
      r.certified = v.certified;
    }
    if (m == "bgg" || m == "both") {
      r.result["bgg"] = intOrNull(ldSViaBGG(c.pres));
      r.certified = true;
    }
  } else if (c.kind == RingKind::Exterior) {
    FiniteGradedModule n = realizeEModule(c.pres);
    int h = defaultH(c.spec);
    if (m == "bgg" || m == "both") {
      const int exact = ldExactE(n);
      r.result["bgg"] = intOrNull(exact);
      if (m == "both" && exact != kNegInfinity) h = std::max(h, exact + 2);
      r.certified = true;
    } else {
      r.certified = false;
    }
    if (m == "direct" || m == "both") {
      r.result["direct"] = intOrNull(n.isZero() ? kNegInfinity : ldLowerBoundE(n, h));
      r.truncationH = h;
    }
  } else {
    if (m != "direct") throw InputError("ld over a quotient algebra supports only method \"direct\"");
    const int h = defaultH(c.spec);
    TruncatedAResolution res = minimalResolutionA(c.pres, h, c.spec.maxDeg.value_or(-1), c.spec.forceBounds);
    const BettiTable lin = linHomologyA(res);
    int ld = lin.empty() ? (res.betti.empty() ? kNegInfinity : 0) : 0;
    for (const auto& [key, v] : lin.entries()) ld = std::max(ld, key.first);
    r.result["direct"] = intOrNull(ld);
    r.truncationH = res.maxHomological;
    r.truncationD = res.maxDegree;
    r.certified = false;
  }
  if (m == "both") r.result["methods_agree"] = r.result["bgg"] == r.result["direct"];
  r.result["ld"] = m == "direct" ? r.result["direct"] : r.result["bgg"];
  r.result["certified"] = r.certified;
  r.table = "ld: " + (r.result["ld"].is_null() ? std::string("-inf") : r.result["ld"].dump()) +
            (r.certified ? "" : " (lower bound)") + "\n";
  if (m == "both") r.table += std::string("methods agree: ") + (r.result["methods_agree"].get<bool>() ? "yes" : "no") + "\n";
  return r;
}

Report runLinHomology(const Context& c) {
  Report r;
  BettiTable h;
  if (c.kind == RingKind::Polynomial) {
    h = linHomologyS(minimalFreeResolutionS(c.pres));
  } else if (c.kind == RingKind::Exterior) {
    const int hh = defaultH(c.spec);
    h = linHomologyE(realizeEModule(c.pres), hh);
    r.truncationH = hh;
    r.certified = false;
  } else {
    const int hh = defaultH(c.spec);
    TruncatedAResolution res = minimalResolutionA(c.pres, hh, c.spec.maxDeg.value_or(-1), c.spec.forceBounds);
    h = linHomologyA(res);
    r.truncationH = res.maxHomological;
    r.truncationD = res.maxDegree;
    r.certified = false;
  }
  r.result = {{"lin_homology", tableJson(h)}};
  r.table = h.empty() ? std::string("lin homology: zero\n") : h.toMacaulayString();
  return r;
}

Report runKoszulCheck(const Context& c) {
  Report r;
  const int h = defaultH(c.spec);
  bool verdict = false;
  if (c.kind == RingKind::Polynomial) {
    verdict = minimalFreeResolutionS(residueFieldPresentation(c.ring)).betti.isLinear();
  } else if (c.kind == RingKind::Exterior) {
    verdict = minimalFreeResolutionE(realizeEModule(residueFieldPresentation(c.ring)), h).betti().isLinear();
  } else {
    verdict = koszulnessCheck(c.ring, h);
  }
  r.truncationH = h;
  r.certified = c.kind == RingKind::Polynomial;
  r.result = {{"koszul_up_to", h}, {"verdict", verdict}};
  r.table = std::string("koszul up to ") + std::to_string(h) + ": " + (verdict ? "yes" : "no") + "\n";
  return r;
}

Report runCohomology(const Context& c) {
  requireKind(c, {RingKind::Polynomial, RingKind::Exterior});
  Report r;
  json list = json::array();
  std::string text;
  if (c.kind == RingKind::Exterior) {
    FreeComplex bgg = bggOfEModule(realizeEModule(c.pres));
    for (const CohomologyModule& h : bggCohomology(bgg)) {
      if (h.isZero()) continue;
      SResolution res = minimalFreeResolutionS(h.presentation);
      list.push_back({{"position", h.position}, {"betti", tableJson(res.betti)}, {"reg", intOrNull(res.reg)}});
      text += "H^" + std::to_string(h.position) + ": reg " + valueText(res.reg) + "\n" + res.betti.toMacaulayString();
    }
  } else {
    SResolution res = minimalFreeResolutionS(c.pres);
    if (!res.p0.empty()) {
      const int lo = *std::min_element(res.p0.begin(), res.p0.end()) - 1;
      const int hi = res.reg + 2;
      RingPtr e = koszulDualRing(*c.ring);
      FreeComplex bgg = bggOfSModule(c.pres, lo, hi, e);
      for (int p = -hi + 1; p <= -lo - 1; ++p) {
        FiniteGradedModule h = cohomologyModuleE(bgg, p);
        if (h.isZero()) continue;
        json dims = json::object();
        for (int d = h.bottomDegree(); d <= h.topDegree(); ++d) dims[std::to_string(d)] = h.dim(d);
        list.push_back({{"position", p}, {"dims", dims}, {"reg", intOrNull(regEViaBGG(h))}});
        text += "H^" + std::to_string(p) + ": dims " + dims.dump() + "\n";
      }
      r.truncationD = hi;
    }
  }
  r.result = {{"cohomology", list}};
  r.table = text.empty() ? std::string("cohomology: zero\n") : text;
  return r;
}

Report runComponentwiseLinear(const Context& c) {
  requireKind(c, {RingKind::Polynomial, RingKind::Exterior});
  Report r;
  const bool v = c.kind == RingKind::Polynomial ? componentwiseLinearS(c.pres) : componentwiseLinearE(realizeEModule(c.pres));
  r.result = {{"componentwise_linear", v}};
  r.table = std::string("componentwise linear: ") + (v ? "yes" : "no") + "\n";
  return r;
}

Report runAeCheck(const Context& c) {
  requireKind(c, {RingKind::Quotient});
  Report r;
  const int h = defaultH(c.spec);
  const int d = c.spec.maxDeg.value_or(-1);
  AEComparison cmp = aeComparison(c.pres, h, d, c.spec.forceBounds);
  r.truncationH = h;
  r.truncationD = d < 0 ? autoDegreeBound(c.pres, h) : d;
  r.certified = false;
  r.result = {{"reg_A", intOrNull(cmp.regA)}, {"reg_S", intOrNull(cmp.regS)}, {"holds", cmp.holds}};
  r.table = "reg_A (truncated): " + valueText(cmp.regA) + "\nreg_S: " + valueText(cmp.regS) +
            "\nholds: " + (cmp.holds ? "yes" : "no") + "\n";
  return r;
}

Report runGolod(const Context& c) {
  requireKind(c, {RingKind::Quotient});
  Report r;
  const bool v = golodCriterion(c.ring);
  r.result = {{"two_linear_ideal", v}};
  r.table = std::string("ideal has a 2-linear resolution: ") + (v ? "yes" : "no") + "\n";
  return r;
}

}  // namespace

RingElem parseElement(const std::string& text, const RingPtr& ring) { return ElementParser(text, ring).parse(); }

JobSpec jobFromJson(const json& j) {
  if (!j.is_object()) throw InputError("job document must be a JSON object");
  JobSpec s;
  if (j.contains("characteristic")) {
    const auto p = field<std::int64_t>(j, "characteristic", "job");
    if (p < 2 || p >= (1LL << 31) || !isPrime(static_cast<std::uint64_t>(p)))
      throw InputError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
    s.characteristic = static_cast<std::uint32_t>(p);
  }
  const json& ring = j.contains("ring") ? j.at("ring") : throw InputError("missing \"ring\"");
  s.ring.kind = field<std::string>(ring, "kind", "ring");
  if (s.ring.kind != "polynomial" && s.ring.kind != "exterior" && s.ring.kind != "quotient")
    throw InputError("unknown ring kind \"" + s.ring.kind + "\"");
  s.ring.vars = field<std::vector<std::string>>(ring, "vars", "ring");
  s.ring.relations = optionalField<std::vector<std::string>>(ring, "relations", "ring").value_or(std::vector<std::string>{});
  s.ring.degreeBound = optionalField<int>(ring, "degree_bound", "ring");
  if (j.contains("module") && !j.at("module").is_null()) {
    const json& m = j.at("module");
    ModuleSpec ms;
    ms.rowDegrees = field<std::vector<int>>(m, "row_degrees", "module");
    ms.colDegrees = optionalField<std::vector<int>>(m, "col_degrees", "module");
    ms.matrix = field<std::vector<std::vector<std::string>>>(m, "matrix", "module");
    s.module = std::move(ms);
  }
  s.command = field<std::string>(j, "command", "job");
  s.maxH = optionalField<int>(j, "max_h", "job");
  s.maxDeg = optionalField<int>(j, "max_deg", "job");
  if (auto m = optionalField<std::string>(j, "method", "job")) s.method = *m;
  if (auto f = optionalField<std::string>(j, "format", "job")) s.format = *f;
  if (auto fb = optionalField<bool>(j, "force_bounds", "job")) s.forceBounds = *fb;
  return s;
}

void validateJob(const JobSpec& s) {
  if (!kCommands.contains(s.command)) throw InputError("unknown command \"" + s.command + "\"");
  if (s.method != "direct" && s.method != "bgg" && s.method != "both")
    throw InputError("method must be direct, bgg or both");
  if (s.format != "json" && s.format != "table") throw InputError("format must be json or table");
  if (s.maxH && *s.maxH < 1) throw InputError("max_h must be positive");
  if (s.maxDeg && *s.maxDeg < 1) throw InputError("max_deg must be positive");
  if (s.ring.degreeBound && *s.ring.degreeBound < 2) throw InputError("degree_bound must be at least 2");
  if (!s.module && !kModuleFree.contains(s.command)) throw InputError("command \"" + s.command + "\" needs a module");
  RingPtr ring = buildRing(s);
  if (s.module) buildPresentation(s, ring);
}

JobSpec parseJob(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  JobSpec s = jobFromJson(j);
  validateJob(s);
  return s;
}

json jobToJson(const JobSpec& s) {
  json ring = {{"kind", s.ring.kind}, {"vars", s.ring.vars}, {"relations", s.ring.relations}};
  if (s.ring.degreeBound) ring["degree_bound"] = *s.ring.degreeBound;
  json j = {{"characteristic", s.characteristic}, {"ring", ring},        {"command", s.command},
            {"method", s.method},                 {"format", s.format}, {"force_bounds", s.forceBounds}};
  if (s.module) {
    json m = {{"row_degrees", s.module->rowDegrees}, {"matrix", s.module->matrix}};
    if (s.module->colDegrees) m["col_degrees"] = *s.module->colDegrees;
    j["module"] = m;
  }
  if (s.maxH) j["max_h"] = *s.maxH;
  if (s.maxDeg) j["max_deg"] = *s.maxDeg;
  return j;
}

std::string serializeJob(const JobSpec& spec) { return jobToJson(spec).dump(); }

RingPtr buildRing(const JobSpec& spec) {
  const auto& vars = spec.ring.vars;
  if (vars.empty()) throw InputError("ring needs at least one variable");
  if (vars.size() > static_cast<std::size_t>(kMaxVars))
    throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !isIdentifierStart(v[0]) || !std::all_of(v.begin(), v.end(), isIdentifierChar))
      throw InputError("invalid variable name \"" + v + "\"");
    if (!seen.insert(v).second) throw InputError("duplicate variable \"" + v + "\"");
  }
  PrimeField f(spec.characteristic);
  if (spec.ring.kind == "exterior") {
    if (!spec.ring.relations.empty()) throw InputError("exterior rings take no relations");
    return GradedRing::exterior(f, vars);
  }
  RingPtr s = GradedRing::polynomial(f, vars);
  if (spec.ring.kind == "polynomial") {
    if (!spec.ring.relations.empty()) throw InputError("polynomial rings take no relations; use kind \"quotient\"");
    return s;
  }
  if (spec.ring.relations.empty()) throw InputError("quotient ring needs relations");
  std::vector<RingElem> rels;
  for (const auto& text : spec.ring.relations) {
    RingElem r = parseElement(text, s);
    if (r.isZero() || r.degree() != 2) throw InputError("relation \"" + text + "\" is not a nonzero quadric");
    rels.push_back(r);
  }
  return quotientAlgebra(s, rels, spec.ring.degreeBound.value_or(8));
}

HomogeneousMatrix buildPresentation(const JobSpec& spec, const RingPtr& ring) {
  if (!spec.module) return HomogeneousMatrix(ring, {}, {});
  const ModuleSpec& m = *spec.module;
  const int rows = static_cast<int>(m.rowDegrees.size());
  if (static_cast<int>(m.matrix.size()) != rows)
    throw InputError("matrix has " + std::to_string(m.matrix.size()) + " rows but row_degrees has " +
                     std::to_string(rows));
  const std::size_t cols = rows == 0 ? 0 : m.matrix.front().size();
  for (const auto& row : m.matrix)
    if (row.size() != cols) throw InputError("matrix rows have different lengths");
  if (m.colDegrees && m.colDegrees->size() != cols)
    throw InputError("col_degrees has " + std::to_string(m.colDegrees->size()) + " entries for " +
                     std::to_string(cols) + " columns");
  std::vector<std::vector<RingElem>> entries(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      try {
        entries[r].push_back(parseElement(m.matrix[r][c], ring));
      } catch (const InputError& e) {
        throw InputError("matrix entry (" + std::to_string(r) + ", " + std::to_string(c) + "): " + e.what());
      }
    }
  HomogeneousMatrix out(ring, m.rowDegrees, {});
  for (std::size_t c = 0; c < cols; ++c) {
    std::optional<int> degree;
    if (m.colDegrees) degree = (*m.colDegrees)[c];
    HomogeneousMatrix::Column column;
    for (int r = 0; r < rows; ++r) {
      const RingElem& e = entries[r][c];
      if (e.isZero()) continue;
      const int d = m.rowDegrees[r] + e.degree();
      if (!degree) degree = d;
      if (*degree != d)
        throw InputError("matrix entry (" + std::to_string(r) + ", " + std::to_string(c) +
                         ") does not match the degree of its column");
      column.push_back({r, e});
    }
    if (degree) out.appendColumn(*degree, std::move(column));
  }
  return out;
}

Report runJob(const JobSpec& spec) {
  validateJob(spec);
  RingPtr ring = buildRing(spec);
  Context c{spec, ring, buildPresentation(spec, ring), ring->kind()};
  Report r;
  if (spec.command == "betti") r = runBetti(c);
  else if (spec.command == "reg") r = runReg(c);
  else if (spec.command == "ld") r = runLd(c);
  else if (spec.command == "lin-homology") r = runLinHomology(c);
  else if (spec.command == "koszul-check") r = runKoszulCheck(c);
  else if (spec.command == "cohomology") r = runCohomology(c);
  else if (spec.command == "componentwise-linear") r = runComponentwiseLinear(c);
  else if (spec.command == "ae-check") r = runAeCheck(c);
  else r = runGolod(c);
  r.command = spec.command;
  return r;
}

std::string inputsHash(const JobSpec& spec) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : serializeJob(spec)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string reportJson(const JobSpec& spec, const Report& report) {
  json truncation = {{"H", report.truncationH < 0 ? json(nullptr) : json(report.truncationH)},
                     {"D", report.truncationD < 0 ? json(nullptr) : json(report.truncationD)},
                     {"certified", report.certified}};
  json out = {{"command", report.command},
              {"inputs_hash", inputsHash(spec)},
              {"result", report.result},
              {"truncation", truncation},
              {"version", kReportVersion}};
  return out.dump(2) + "\n";
}

std::string render(const JobSpec& spec, const Report& report) {
  if (spec.format == "json") return reportJson(spec, report);
  std::string out = report.command + "\n" + report.table;
  if (report.truncationH >= 0 || report.truncationD >= 0) {
    out += "truncation: H=" + (report.truncationH < 0 ? std::string("-") : std::to_string(report.truncationH)) +
           " D=" + (report.truncationD < 0 ? std::string("-") : std::to_string(report.truncationD)) +
           (report.certified ? " (certified)" : " (not certified)") + "\n";
  }
  return out;
}

int exitCodeFor(const std::exception& e) {
  if (dynamic_cast<const InputError*>(&e)) return 1;
  if (dynamic_cast<const BoundError*>(&e)) return 2;
  return 3;
}

}  // namespace koszul::cli
