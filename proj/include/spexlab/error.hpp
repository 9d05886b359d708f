#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spexlab {

/// Precondition violation on a public operation.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input; `offset` is the 0-based byte position of the fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at byte " + std::to_string(offset)), message_(message), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// A computation refused because it exceeds a configured guardrail.
class GuardrailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An interval enclosure could not be separated from an integer.
class IntegerBoundaryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace spexlab
