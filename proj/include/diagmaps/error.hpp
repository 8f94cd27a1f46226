#pragma once

#include <stdexcept>
#include <string>

namespace diagmaps {

// Base class for every error raised by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed presentation data: dimension mismatches and the like.
struct PresentationError : Error {
  using Error::Error;
};

// A matrix does not define a homomorphism on the given presentations.
struct NotWellDefinedError : Error {
  using Error::Error;
};

// An element or argument belongs to the wrong group or monoid.
struct DomainError : Error {
  using Error::Error;
};

struct MixedDimensionError : DomainError {
  using DomainError::DomainError;
};

// A matrix outside M was passed where n even requires membership in M.
struct NotInMError : DomainError {
  using DomainError::DomainError;
};

// Requested dimension lies outside the shipped sphere table.
struct UnsupportedDimensionError : Error {
  using Error::Error;
};

// The operation would have to enumerate an infinite group.
struct EnumerationError : Error {
  using Error::Error;
};

// Bad JSON or command line input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace diagmaps
