#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad syntax, inhomogeneous entry, ring mismatch).
class InputError : public Error {
 public:
  using Error::Error;
};

// A requested truncation bound is below the bound needed for exact results.
class BoundError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed (d∘d ≠ 0, oracle disagreement). Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace koszul
