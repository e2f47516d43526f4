#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epc {

/// Modulus is not a supported prime, or two operands disagree on it.
class ModulusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lengths or row widths disagree.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. Line and column are 1-based; 0 means "not known".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)), line_(line), column_(column) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A classification was requested past its configured size limit.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& message, std::size_t largest_feasible_n)
      : std::runtime_error(message), largest_feasible_n_(largest_feasible_n) {}

  [[nodiscard]] std::size_t largest_feasible_n() const { return largest_feasible_n_; }

 private:
  std::size_t largest_feasible_n_;
};

}  // namespace epc
