#pragma once

#include <stdexcept>
#include <string>

namespace orbitforge {

// Base for every error raised by the library. The CLI maps these to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

// Wrong isometry type for the requested operation (e.g. fixed point of a hyperbolic).
struct ClassificationError : Error {
  using Error::Error;
};

struct DegenerateInput : Error {
  using Error::Error;
};

struct NotHyperbolicTriangle : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

struct IndexError : Error {
  using Error::Error;
};

struct NotDTError : Error {
  using Error::Error;
};

struct PolytopeViolation : Error {
  using Error::Error;
};

struct ChainInvariantError : Error {
  using Error::Error;
};

}  // namespace orbitforge
