#pragma once

#include <stdexcept>
#include <string>

namespace qres {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the operation's stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// gcd(a, m) != 1 where an inverse was required.
class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Neither sign satisfies a congruence that is known to hold with one of them.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

/// A case table did not match any branch.
class CaseFallthrough : public Error {
 public:
  using Error::Error;
};

/// A branch that a theorem excludes was reached.
class Unreachable : public Error {
 public:
  using Error::Error;
};

/// An exactness assertion failed (e.g. a class-number sum did not divide).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Unknown verification item identifier.
class UnknownItem : public Error {
 public:
  using Error::Error;
};

}  // namespace qres
