#pragma once

#include <stdexcept>
#include <string>

namespace qalcove {

/// Malformed user input: unparsable type strings, weights, ranks that do not match.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A root-of-unity order that violates the alcove validity bound.
class InvalidContext : public std::domain_error {
 public:
  InvalidContext(const std::string& what, std::string bound)
      : std::domain_error(what), bound_(std::move(bound)) {}

  /// Human-readable form of the inequality that failed, e.g. "l' > h (7 > 6)".
  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

/// An internal consistency check failed. Always indicates a bug, never bad input.
class SelfCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qalcove
