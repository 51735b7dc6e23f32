#pragma once

#include <stdexcept>
#include <string>

namespace nno {

/// Malformed input: bad syntax, loops, duplicate edges, ids out of range.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The graph is outside the class the algorithms are defined on.
class NotInClassError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural claim the algorithms rely on failed on a concrete input.
/// Never expected for in-class graphs; any occurrence is a counterexample.
class TheoryViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential oracle was called on an instance above its size guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The generator kept producing out-of-class graphs; `instance` holds the
/// last rejected graph as an edge list.
class RejectionLimitError : public std::runtime_error {
 public:
  RejectionLimitError(const std::string& what, std::string instance)
      : std::runtime_error(what), instance(std::move(instance)) {}
  std::string instance;
};

class OracleTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nno
