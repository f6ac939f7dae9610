#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpoly {

/// Operation applied outside its mathematical domain (e.g. inverting zero).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Matrix shapes do not fit the operation.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_{position} {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A computed root failed its residual check, or two solution routes disagree.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace qpoly
