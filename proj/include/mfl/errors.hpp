#pragma once

#include <stdexcept>
#include <string>

namespace mfl {

// Base class for all toolkit errors so callers can catch mfl failures wholesale.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument or configuration value (bad range, zero-variance sample, ...).
struct ParamError : Error {
  using Error::Error;
};

// Malformed input file contents (bad JSON, missing field, duplicate arc, ...).
struct ParseError : Error {
  using Error::Error;
};

// Filesystem-level failure (cannot open/read/write).
struct IoError : Error {
  using Error::Error;
};

// Refusal to run an exponential/huge computation past its size guard.
struct GuardError : Error {
  using Error::Error;
};

// An assignment references a facility, arc, or index that does not exist.
struct StructuralError : Error {
  using Error::Error;
};

// A move was computed against a solution state that has since changed.
struct StaleMoveError : Error {
  using Error::Error;
};

}  // namespace mfl
