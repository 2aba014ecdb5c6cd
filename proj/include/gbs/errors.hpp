#pragma once

#include <stdexcept>
#include <string>

namespace gbs {

// Malformed or out-of-domain input. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure with a source position (1-based).
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A configured resource cap was exceeded. The CLI maps this to exit code 2.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Defensive check inside a construction failed; indicates a library bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gbs
