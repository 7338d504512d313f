#pragma once

#include <stdexcept>
#include <string>

namespace ils {

// Exception hierarchy. Every error raised by the library derives from ils::Error
// so callers (the CLI in particular) can map them onto exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor shapes that do not line up.
struct DimensionError : Error {
  using Error::Error;
};

// Argument values outside their documented domain.
struct ArgumentError : Error {
  using Error::Error;
};

// An operation that the given input cannot support (e.g. a detached discriminator).
struct UnsupportedError : Error {
  using Error::Error;
};

// Overflow, NaN or other non-finite results.
struct NumericalError : Error {
  using Error::Error;
};

// Filesystem and codec failures; the message carries the offending path.
struct IoError : Error {
  using Error::Error;
};

// Invalid configuration keys or values.
struct ConfigError : Error {
  using Error::Error;
};

// Dataset that violates its manifest invariants.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace ils
