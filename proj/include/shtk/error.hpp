#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shtk {

/// Base class of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (scalar text, descriptors, flags). Carries the
/// character offset of the first offending token when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what
                               : what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed request outside the supported domain: unknown family,
/// out-of-range parameters, shape mismatch, no matrix model available.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computed object violated one of its structural invariants.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace shtk
