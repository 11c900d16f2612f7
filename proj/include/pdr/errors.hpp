#pragma once

#include <stdexcept>
#include <string>

namespace pdr {

/// Malformed group descriptor, digraph file or command-line value.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A supplied multiplication table violates the group axioms.
class TableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element or vertex index outside its valid range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A connection family would create a loop (identity in a diagonal set).
class LoopError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called with inputs that violate its contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search ran out of candidates before finding a result.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The instance is too large for exhaustive enumeration.
class TooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction failed its own oracle check. Always a bug, never an
/// expected outcome.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pdr
