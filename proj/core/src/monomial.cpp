#include "koszul/monomial.hpp"

#include <bit>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

Monomial Monomial::variable(int index) {
  if (index < 0 || index >= kMaxVars) throw InputError("variable index out of range");
  Monomial m;
  m.exp_[static_cast<std::size_t>(index)] = 1;
  m.degree_ = 1;
  return m;
}

Monomial Monomial::fromExponents(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw InputError("too many variables (max " + std::to_string(kMaxVars) + ")");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw InputError("exponent out of range");
    m.exp_[i] = static_cast<std::uint8_t>(exponents[i]);
    m.degree_ += exponents[i];
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::isSquarefree() const {
  for (auto e : exp_)
    if (e > 1) return false;
  return true;
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (exp_[i] != 0) mask |= 1u << i;
  return mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = exp_[i] + other.exp_[i];
    if (e > 255) throw InputError("monomial exponent overflow");
    r.exp_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint8_t>(exp_[i] - other.exp_[i]);
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = exp_[i] > other.exp_[i] ? exp_[i] : other.exp_[i];
    r.degree_ += r.exp_[i];
  }
  return r;
}

bool Monomial::coprimeTo(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int compareDegRevLex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int exteriorSign(std::uint32_t left, std::uint32_t right) {
  int inversions = 0;
  while (right != 0) {
    int b = std::countr_zero(right);
    right &= right - 1;
    inversions += std::popcount(left >> (b + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

}  // namespace koszul
