#pragma once

#include <stdexcept>
#include <string>

namespace mac {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file (graph, coloring, or formula).
struct FormatError : Error {
  using Error::Error;
};

// An argument violates a documented precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// The graph has a blocking vertex (condition on equal-neighborhood
// majorities) and admits no majority additive coloring at all.
struct NotGoodError : Error {
  using Error::Error;
};

// The private neighbor condition fails, so the sampler does not apply.
struct PncViolatedError : Error {
  PncViolatedError(int u, int v, const std::string& what)
      : Error(what), u(u), v(v) {}
  int u;
  int v;
};

// A resample or iteration budget ran out before success.
struct BudgetExceededError : Error {
  using Error::Error;
};

// Instance exceeds the guard for an enumeration-based routine.
struct TooLargeError : Error {
  using Error::Error;
};

// random_good_graph gave up after too many rejected samples.
struct RetriesExhaustedError : Error {
  using Error::Error;
};

}  // namespace mac
