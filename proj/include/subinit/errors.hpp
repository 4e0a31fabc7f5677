#pragma once

#include <stdexcept>
#include <string>

namespace subinit {

/// Base class for every error caused by bad input (exit code 1 in the CLI).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vector or ring sizes that do not match.
struct DimensionError : Error {
  using Error::Error;
};

/// An operation was called outside its documented domain.
struct PreconditionError : Error {
  using Error::Error;
};

/// Malformed polynomial, rational, or file input.
struct ParseError : Error {
  using Error::Error;
};

/// Well-formed input the library deliberately does not handle.
struct UnsupportedError : Error {
  using Error::Error;
};

/// A mathematical invariant that must always hold was violated. Never a user
/// error; indicates a bug (exit code 2 in the CLI).
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace subinit
