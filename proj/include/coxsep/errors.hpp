#pragma once

#include <stdexcept>
#include <string>

namespace coxsep {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input violates a hypothesis the construction needs.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

// Orbit membership could not be decided within the enumeration bound.
class InconclusiveOrbit : public Error {
 public:
  using Error::Error;
};

// A configured search or degree budget ran out.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed at runtime. Never expected; always fatal.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

// A wall handed to a surgery operation does not bound the core.
class NotBounding : public Error {
 public:
  using Error::Error;
};

// Hull closure left the allowed ball.
class HullEscape : public Error {
 public:
  using Error::Error;
};

}  // namespace coxsep
