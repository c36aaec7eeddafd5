#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knotd {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A contract violation: the inputs are outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested invariant has no implemented computation for this input.
class Unavailable : public Error {
 public:
  using Error::Error;
};

/// Homology towers did not stabilize inside the U-power window.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a knot expression, carrying the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("at position " + std::to_string(position) + ": " + message),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

}  // namespace knotd
