#pragma once

#include <stdexcept>
#include <string>

namespace ssc {

// Bad argument to an operation (e.g. m < 3 for a Jahangir build).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside the hypothesis it is defined for.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed graph document. Carries the 1-based line of the offending token
// when one is known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Input exceeds an exhaustive-enumeration bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A removed-edge set whose complement is not a spanning tree.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ssc
