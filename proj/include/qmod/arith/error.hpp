#pragma once

#include <stdexcept>
#include <string>

namespace qmod {

/// Input outside an operation's domain (bad parameters, shape mismatch, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The working field cannot support the requested computation (prime too small, not prime).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity that must always hold was violated.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qmod
