#pragma once

#include <stdexcept>
#include <string>

namespace maschke {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A FieldElement with irrational coordinates was reduced modulo p.
class NonRational : public Error {
 public:
  using Error::Error;
};

/// The prime is not an odd prime, or a denominator is divisible by it.
class BadPrime : public Error {
 public:
  using Error::Error;
};

class DegenerateSpan : public Error {
 public:
  using Error::Error;
};

class DependentForms : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Closure or orbit enumeration grew past its element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The Molien average did not come out as a nonnegative integer.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace maschke
