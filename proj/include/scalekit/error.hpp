#pragma once

#include <stdexcept>
#include <string>

namespace scalekit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed universe spec, measure config, or flag value.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Measure not defined for the universe's mode or grade alphabet.
class UnsupportedMeasure : public Error {
 public:
  using Error::Error;
};

/// A size cap (universe, enumeration, difference-structure) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Ordering text could not be parsed or violates order axioms.
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// Values and ordering refer to different universes.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace scalekit
