#pragma once

#include <stdexcept>

namespace copos {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A value lies outside the domain an operation accepts (e.g. a point outside
// the unit box, a zero denominator, a negative coordinate).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration was requested above the configured dimension limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// The candidate point is not a KKT point of the box-constrained minimization.
class ComplementarityViolation : public Error {
 public:
  using Error::Error;
};

// Certification was requested for a copositive matrix.
class CopositiveInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace copos
