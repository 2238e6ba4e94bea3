#pragma once

#include <stdexcept>
#include <string>

namespace turan {

// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition or theorem hypothesis does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Malformed graph text, spec file or unreadable input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input exceeds the size an exhaustive routine is allowed to handle.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

namespace detail {

[[noreturn]] inline void fail_precondition(const std::string& what) {
  throw PreconditionError(what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail_precondition(what);
}

}  // namespace detail
}  // namespace turan
