#pragma once

#include <stdexcept>
#include <string>

namespace invschub {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Caller violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A symmetric function is not in the span of the requested basis.
class NotInSpan : public Error {
 public:
  using Error::Error;
};

// A computed value contradicts a theorem the library relies on.
class Falsification : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed; indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

#define INVSCHUB_CHECK(cond, msg)                                           \
  do {                                                                      \
    if (!(cond)) throw ::invschub::InvariantViolation(std::string(msg));    \
  } while (0)

}  // namespace invschub
