#include "koszul/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "koszul/complex.hpp"

namespace koszul {

BettiTable BettiTable::ofResolution(const FreeComplex& resolution) {
  BettiTable t;
  for (int p = resolution.start(); p <= resolution.stop(); ++p)
    for (int deg : resolution.term(p)) t.add(-p, deg);
  return t;
}

void BettiTable::add(int i, int j, int count) {
  if (count == 0) return;
  int& v = entries_[{i, j}];
  v += count;
  if (v == 0) entries_.erase({i, j});
}

int BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::maxHomological() const {
  int m = -1;
  for (const auto& [key, v] : entries_) m = std::max(m, key.first);
  return m;
}

int BettiTable::total(int i) const {
  int s = 0;
  for (const auto& [key, v] : entries_)
    if (key.first == i) s += v;
  return s;
}

int BettiTable::regularity() const {
  int r = kNegInfinity;
  for (const auto& [key, v] : entries_) r = std::max(r, key.second - key.first);
  return r;
}

bool BettiTable::isLinear() const {
  if (entries_.empty()) return true;
  int strand = entries_.begin()->first.second - entries_.begin()->first.first;
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const auto& kv) { return kv.first.second - kv.first.first == strand; });
}

std::string BettiTable::toMacaulayString() const {
  std::ostringstream os;
  if (entries_.empty()) {
    os << "(zero module)\n";
    return os.str();
  }
  int iMax = maxHomological();
  int sMin = std::numeric_limits<int>::max(), sMax = std::numeric_limits<int>::min();
  for (const auto& [key, v] : entries_) {
    sMin = std::min(sMin, key.second - key.first);
    sMax = std::max(sMax, key.second - key.first);
  }
  int width = 1;
  for (const auto& [key, v] : entries_) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  width = std::max(width, static_cast<int>(std::to_string(iMax).size()));
  const int labelWidth = std::max(static_cast<int>(std::to_string(sMax).size()),
                                  static_cast<int>(std::to_string(sMin).size())) + 1;
  os << std::setw(labelWidth + 1) << "";
  for (int i = 0; i <= iMax; ++i) os << ' ' << std::setw(width) << i;
  os << '\n' << std::setw(labelWidth + 1) << "total:";
  for (int i = 0; i <= iMax; ++i) os << ' ' << std::setw(width) << total(i);
  os << '\n';
  for (int s = sMin; s <= sMax; ++s) {
    os << std::setw(labelWidth) << s << ':';
    for (int i = 0; i <= iMax; ++i) {
      int v = at(i, i + s);
      os << ' ' << std::setw(width);
      if (v == 0)
        os << '.';
      else
        os << v;
    }
    os << '\n';
  }
  if (!trunc_.complete) {
    os << "(truncated: i <= " << trunc_.maxHomological;
    if (trunc_.maxDegree >= 0) os << ", j <= " << trunc_.maxDegree;
    os << ")\n";
  }
  return os.str();
}

}  // namespace koszul
