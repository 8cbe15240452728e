#pragma once

#include <stdexcept>
#include <string>

namespace dp2 {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// The argument of an H^1 operation is not in ker(1 + sigma).
class NotACocycle : public Error {
 public:
  using Error::Error;
};

class TrivialClass : public Error {
 public:
  using Error::Error;
};

// No rank assignment / decomposition is compatible with the inputs.
class Infeasible : public Error {
 public:
  using Error::Error;
};

class HalfIntegerLeak : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagreed. Never expected to fire.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class InvalidModel : public Error {
 public:
  using Error::Error;
};

class UnknownClaim : public Error {
 public:
  using Error::Error;
};

}  // namespace dp2
