#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace koszul {

class FreeComplex;

/// Sentinel for the regularity of the zero module and similar empty suprema.
inline constexpr int kNegInfinity = std::numeric_limits<int>::min();

/// β_{i,j}: homological index i, internal degree j. Only nonzero entries are stored.
class BettiTable {
 public:
  struct Truncation {
    bool complete = true;
    int maxHomological = -1;  // H
    int maxDegree = -1;       // D, -1 when unbounded
    friend bool operator==(const Truncation&, const Truncation&) = default;
  };

  BettiTable() = default;

  /// Betti numbers of a minimal free resolution (P_i at position -i).
  static BettiTable ofResolution(const FreeComplex& resolution);

  void add(int i, int j, int count = 1);
  int at(int i, int j) const;
  const std::map<std::pair<int, int>, int>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  int maxHomological() const;
  /// Total rank of the i-th free module.
  int total(int i) const;
  /// max{j - i : β_{i,j} ≠ 0}, or kNegInfinity when empty.
  int regularity() const;
  /// True iff all nonzero entries lie on the single strand j - i = const.
  bool isLinear() const;

  const Truncation& truncation() const { return trunc_; }
  void setTruncation(Truncation t) { trunc_ = t; }

  /// Macaulay-style table: rows are j - i, columns are i.
  std::string toMacaulayString() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, int> entries_;
  Truncation trunc_;
};

}  // namespace koszul
