#pragma once

#include <stdexcept>
#include <string>

namespace rctw {

/// Raised when an argument violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed external input. `line` is 1-based, or 0 when the problem is not
/// tied to one line.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line) : InputError(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A decomposition document was written for a different graph.
class FingerprintMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// Raised when an exact computation would exceed its configured size limit.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, int limit)
      : std::runtime_error(what), limit_(limit) {}
  int limit() const { return limit_; }

 private:
  int limit_;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rctw
