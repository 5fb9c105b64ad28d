#pragma once

#include <stdexcept>
#include <string>

namespace musicbox {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ArgumentError : Error {
  using Error::Error;
};

// A degree lies outside the carrier of the degree monoid in use, or an
// arithmetic step left the representable range.
struct CarrierError : Error {
  using Error::Error;
};

// A 1-based composition position is outside [1, arity].
struct PositionError : Error {
  using Error::Error;
};

// Two multi-patterns with different multiplicities were combined.
struct MultiplicityError : Error {
  using Error::Error;
};

// A full composition received the wrong number of operands.
struct ArityMismatchError : Error {
  using Error::Error;
};

// An operation was applied under the wrong degree monoid variant.
struct MonoidError : Error {
  using Error::Error;
};

struct MonotonicityError : Error {
  using Error::Error;
};

struct ColorMismatchError : Error {
  using Error::Error;
};

struct NotAChordError : Error {
  using Error::Error;
};

struct NotAnArpeggioError : Error {
  using Error::Error;
};

struct NotFlatError : Error {
  using Error::Error;
};

struct NotHomogeneousError : Error {
  using Error::Error;
};

struct InvalidSystemError : Error {
  using Error::Error;
};

struct EmptyRuleSetError : Error {
  using Error::Error;
};

struct ReplayError : Error {
  using Error::Error;
};

// Text input (pattern, system file, log) failed to parse or validate.
struct FormatError : Error {
  using Error::Error;
};

// Rendering requested for a temperament other than 12-TET.
struct EtaError : Error {
  using Error::Error;
};

}  // namespace musicbox
