#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steenrod {

/// Malformed input text. Line and column are 1-based; line is 0 for
/// single-line inputs.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    std::string where = line ? "line " + std::to_string(line) + ", column " + std::to_string(column)
                             : "column " + std::to_string(column);
    return where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a structural rule (degrees, ordering of
/// declarations, duplicate names).
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace steenrod
