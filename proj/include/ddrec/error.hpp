#pragma once

#include <stdexcept>
#include <string>

namespace ddrec {

enum class ErrorKind {
  invalid_argument,
  invalid_index,
  unsupported_shape,
  unknown_family,
  invalid_distribution,
  zero_mass,
  zero_variance,
  saddle_failure,
  size_guard,
  parse_error,
  io_error,
};

const char* to_string(ErrorKind kind);

/// Every module reports failures through this one exception type; `kind`
/// lets callers (the CLI in particular) map errors to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& origin, int line, int column,
             const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& origin() const noexcept { return origin_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string origin_;
  int line_;
  int column_;
  std::string detail_;
};

}  // namespace ddrec
