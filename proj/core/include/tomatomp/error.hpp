#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tomatomp {

/// Raised when caller-supplied data violates a precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by file ingestion; carries the 1-based line number of the offending row.
class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : InputError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tomatomp
