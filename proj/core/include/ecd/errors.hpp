#pragma once

#include <stdexcept>
#include <string>

namespace ecd {

// Caller broke an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph / decomposition file. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An input file could not be opened or read.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search hit its configured size or node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A step that the underlying theory guarantees failed; indicates a bug or an
// input outside the supported class.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ecd
