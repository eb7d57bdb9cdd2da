#pragma once

#include <stdexcept>
#include <string>

namespace factorinv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed monoid, group or system literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A checked 64-bit operation would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An enumeration exceeded its configured budget (factorization count,
// group order, search nodes).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Precondition violated by the caller: element not in the monoid,
// dimension mismatch, hypothesis of a closed formula not met.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace factorinv
