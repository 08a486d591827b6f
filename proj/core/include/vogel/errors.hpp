#pragma once

#include <stdexcept>
#include <string>

namespace vogel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A point was passed to an operation that requires it to lie on a line.
class NotOnLine : public Error {
 public:
  using Error::Error;
};

/// A denominator factor vanishes at the point; use the resolver.
class SingularAtPoint : public Error {
 public:
  using Error::Error;
};

/// The approach line coincides with the zero line of a vanishing
/// denominator factor.
class IrregularLine : public Error {
 public:
  using Error::Error;
};

/// More vanishing factors in the denominator than in the numerator.
class NotResolvable : public Error {
 public:
  using Error::Error;
};

/// The zero form (0,0,0) occurs in a denominator.
class UndefinedExpression : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class InvalidFamilyParameter : public Error {
 public:
  using Error::Error;
};

class OutOfCaseRange : public Error {
 public:
  using Error::Error;
};

}  // namespace vogel
