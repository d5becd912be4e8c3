#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circdeblur {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed a value outside an operation's domain (even kernel, bad size,
/// negative sigma, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Numerical failure inside an otherwise valid call (singular spectrum,
/// non-real inverse transform).
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `offset()` is the byte position where parsing
/// stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace circdeblur
