#include "ddrec/error.hpp"

namespace ddrec {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::invalid_index: return "invalid_index";
    case ErrorKind::unsupported_shape: return "unsupported_shape";
    case ErrorKind::unknown_family: return "unknown_family";
    case ErrorKind::invalid_distribution: return "invalid_distribution";
    case ErrorKind::zero_mass: return "zero_mass";
    case ErrorKind::zero_variance: return "zero_variance";
    case ErrorKind::saddle_failure: return "saddle_failure";
    case ErrorKind::size_guard: return "size_guard";
    case ErrorKind::parse_error: return "parse_error";
    case ErrorKind::io_error: return "io_error";
  }
  return "unknown";
}

ParseError::ParseError(const std::string& origin, int line, int column,
                       const std::string& message)
    : Error(ErrorKind::parse_error,
            origin + ":" + std::to_string(line) + ":" + std::to_string(column) +
                ": " + message),
      origin_(origin),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace ddrec
