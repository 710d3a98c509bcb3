#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qevo {

// Bad argument to an operation (length mismatch, empty instance, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad run configuration: population too small, unknown parameter, ...
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An infeasible selection reached fitness evaluation. Always a missing
// repair call.
class ConstraintViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The exact oracle refuses instances whose DP table would be too large.
class UnsupportedInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qevo
