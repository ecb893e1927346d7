#ifndef TWOHOOK_ERRORS_HPP_
#define TWOHOOK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace twohook {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition on an argument violated (bad n, out-of-range pair, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exponent vector with a repeated entry; its alternant is zero.
class RepeatedExponent : public Error {
 public:
  using Error::Error;
};

// Index is not a legal placement under the weak construction rules.
class PlacementError : public Error {
 public:
  using Error::Error;
};

// Weak-legal placement whose mark/unmark bound fails. Never expected to fire.
class StrongLegalityError : public Error {
 public:
  using Error::Error;
};

class ArcBreakError : public Error {
 public:
  using Error::Error;
};

// Requested instance exceeds an exhaustive-search size bound.
class ResourceBoundError : public Error {
 public:
  using Error::Error;
};

// Evaluation point with repeated coordinates.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace twohook

#endif  // TWOHOOK_ERRORS_HPP_
