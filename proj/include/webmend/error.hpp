#pragma once

#include <stdexcept>
#include <string>

namespace webmend {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotALeaf : public Error {
 public:
  using Error::Error;
};

class EmptyPdg : public Error {
 public:
  using Error::Error;
};

class NoIssues : public Error {
 public:
  using Error::Error;
};

class AllHealthy : public Error {
 public:
  using Error::Error;
};

}  // namespace webmend
