#pragma once

#include <stdexcept>
#include <string>

namespace agmloop {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-positive or non-finite argument where a positive real is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// |q| exceeds the nome cap.
class NomeOutOfRange : public Error {
 public:
  using Error::Error;
};

/// 1/a lies outside the range of theta^2 over the capped nome interval.
class TargetOutOfRange : public Error {
 public:
  using Error::Error;
};

class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Replay was asked for a step that does not exist or is an input step.
class UnknownStep : public Error {
 public:
  using Error::Error;
};

class ModelRejectsAxioms : public Error {
 public:
  using Error::Error;
};

}  // namespace agmloop
