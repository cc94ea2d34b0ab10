#pragma once

#include <stdexcept>
#include <string>

namespace paso {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An annotation or interval that does not denote an element of C[0,1].
class EvalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Safety violations and other program-level semantic errors found before solving.
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// A configured search or grounding cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace paso
