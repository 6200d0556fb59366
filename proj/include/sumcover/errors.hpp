#pragma once

#include <stdexcept>
#include <string>

namespace sumcover {

// Base class for every failure the library reports. The CLI catches this
// one type at its boundary and maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// gcd(a, n) != 1 where a unit was required.
class NotCoprimeError : public Error {
 public:
  using Error::Error;
};

// An operation that needs at least one member was given an empty set.
class EmptySetError : public Error {
 public:
  using Error::Error;
};

// A subset-size parameter is outside [1, |A|] or a similar range.
class BadCardinalityError : public Error {
 public:
  using Error::Error;
};

// The requested target is not a member of the computed sumset.
class UnreachableError : public Error {
 public:
  using Error::Error;
};

// The decomposition pipeline found no arithmetic progression long enough,
// even after enlarging the split.
class APNotFoundError : public Error {
 public:
  using Error::Error;
};

// The remainder set B is too small to guarantee residue coverage mod d.
class SplitTooSmallError : public Error {
 public:
  using Error::Error;
};

// divisor_family requires 3 | n.
class NotDivisibleError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the configured subset budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// A set element violates a construction invariant (zero, duplicate, ...).
class InvalidElementError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (CLI set lists, @files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sumcover
