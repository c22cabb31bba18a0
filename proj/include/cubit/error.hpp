#pragma once

#include <stdexcept>
#include <string>

namespace cubit {

// Malformed text: quantities, notation, rod-spec documents.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rod-spec that violates the RodSpec invariants.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument outside an operation's precondition (negative length,
// target longer than the rod, empty analysis range, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested value cannot be realized by any notch/mark pair.
class Unachievable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Value is outside the dyadic 1/2..1/64 system.
class NotDyadic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Incision noise large enough to reorder marks within a scale.
class PerturbationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cubit
