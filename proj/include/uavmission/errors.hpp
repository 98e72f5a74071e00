#pragma once

#include <stdexcept>
#include <string>

namespace uavmission {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Consecutive flight primitives do not share an endpoint.
class NonContiguousPath : public Error {
 public:
  using Error::Error;
};

/// Requested volume is below what the zero-hover detour through the GBS delivers.
class InsufficientVolume : public Error {
 public:
  using Error::Error;
};

/// Turn-point search requested for a stage whose origin sits on the GBS.
class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

/// Exhaustive order search refused because the instance is too large.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class MissingStageSolution : public Error {
 public:
  using Error::Error;
};

/// Malformed scenario or plan document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace uavmission
