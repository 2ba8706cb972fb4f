#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace koszul {

inline constexpr int kMaxVars = 16;

/// Exponent vector of a commutative monomial, or the indicator vector of a
/// squarefree exterior monomial. Exterior monomials carry no sign; signs live
/// in coefficients.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int index);
  static Monomial fromExponents(std::span<const int> exponents);

  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  int degree() const { return degree_; }
  bool isOne() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool isSquarefree() const;
  /// Bit i set iff variable i occurs (meaningful for squarefree monomials).
  std::uint32_t support() const;

  /// Product of exponent vectors. Throws InputError on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  /// Quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprimeTo(const Monomial& other) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVars> exp_{};
  int degree_ = 0;
};

/// Degree-reverse-lexicographic comparison: negative, zero or positive as a
/// is smaller, equal or larger than b.
int compareDegRevLex(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sign of the exterior product y_A · y_B of two disjoint squarefree
/// monomials: (-1)^{#{(a,b) : a in A, b in B, a > b}}.
int exteriorSign(std::uint32_t left, std::uint32_t right);

}  // namespace koszul
