#pragma once

#include <stdexcept>
#include <string>

namespace abzeta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact division that should have succeeded did not. Every caller in this
/// library treats this as a violated identity, not a recoverable state.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A normalized numerator has a coefficient outside Z[p, q].
class NonIntegerCoefficient : public Error {
 public:
  using Error::Error;
};

/// Enumeration or expansion bound exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Requested power p^x with x not an integer.
class NonIntegralPower : public Error {
 public:
  using Error::Error;
};

/// A denominator factor vanished at the evaluation point.
class PoleHit : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad flags, non-prime p, unparsable polynomial text.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace abzeta
