#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mckay {

/// Malformed presentation text. `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at offset " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Coset enumeration exceeded its budget; the group may be infinite or just large.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValidationFailure {
  kTrivialGroup,
  kAbelianGroup,
  kMissingSquareRelation,
  kNotInnerFaithful,
  kElementOutOfRange,
  kNotIdentityPosition,
};

const char* to_string(ValidationFailure kind) noexcept;

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationFailure kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ValidationFailure kind() const noexcept { return kind_; }

 private:
  ValidationFailure kind_;
};

/// Two independent computations disagreed, or a table failed a self-check.
/// Never a legitimate outcome.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mckay
