#pragma once

#include <stdexcept>
#include <string>

namespace cutmis {

// Malformed or out-of-contract input supplied by a caller.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad data read from disk: malformed files, missing fixtures, results that
// contradict stored reference bounds.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exact solvers refuse inputs above their hard size caps.
class SizeLimitError : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace cutmis
