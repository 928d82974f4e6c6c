#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace homkernel {

/// Base of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
      : Error(make_message(position, expected, found)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string make_message(std::size_t pos, const std::vector<std::string>& expected,
                                  const std::string& found) {
    std::string msg = "syntax error at position " + std::to_string(pos) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += (i + 1 == expected.size()) ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + found;
    return msg;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnknownParameter : public Error {
 public:
  explicit UnknownParameter(const std::string& name)
      : Error("unknown parameter '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A literal denominator that normalizes to zero while parsing, e.g. `1/(a-a)`.
class DivisionByZeroConstant : public DivisionByZero {
 public:
  using DivisionByZero::DivisionByZero;
};

class DenominatorVanishes : public Error {
 public:
  DenominatorVanishes(const std::string& binding)
      : Error("denominator vanishes under binding " + binding), binding_(binding) {}
  const std::string& binding() const { return binding_; }

 private:
  std::string binding_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, const std::string& witness)
      : Error("validation failed (" + invariant + "): " + witness),
        invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Raised where a computation needs a value that is only available at excluded parameters.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace homkernel
