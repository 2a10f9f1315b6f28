#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller-side precondition does not hold (bad sizes, bad indices, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

/// Random sampling kept landing on a degenerate configuration.
struct DegenerateError : Error {
  using Error::Error;
};

/// Two computations that must agree did not; always an internal defect.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace verlinde
