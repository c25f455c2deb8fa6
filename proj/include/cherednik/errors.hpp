#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

/// Malformed user input (bad spec, unknown label, unsupported request).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A question the engine cannot answer without more data (e.g. missing
/// Schur tables for a stratum).
class Undecidable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Never caused by valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

}  // namespace cherednik
