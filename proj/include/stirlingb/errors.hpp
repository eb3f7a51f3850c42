#pragma once

#include <stdexcept>
#include <string>

namespace stirlingb {

/// A coefficient (or degree index) left the signed 64-bit range.
class OverflowError : public std::overflow_error {
public:
  explicit OverflowError(const std::string& operation)
      : std::overflow_error("arithmetic overflow in " + operation),
        operation_(operation) {}

  const std::string& operation() const noexcept { return operation_; }

private:
  std::string operation_;
};

/// Arguments outside the mathematical domain of a function (k > n, n < 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An enumeration was requested beyond the configured size guard.
class SizeLimitError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Malformed input object (bad word, bad cycle decomposition, unparsable text).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace stirlingb
