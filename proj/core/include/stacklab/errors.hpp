#pragma once

#include <stdexcept>
#include <string>

namespace stacklab {

// Caller violated an interface contract (mismatched orders, unknown tag, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically invalid input (non-unit constant term, malformed symbol, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds a configured resource bound (enumeration safety limit).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floating-point procedure failed to converge or left the representable range.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stacklab
