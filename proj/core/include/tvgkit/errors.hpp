#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tvgkit {

/// Input outside an operation's domain (disconnected graph, unknown edge, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the exponential oracles when an input exceeds a configured cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Bad run configuration, e.g. an unknown protocol name.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator could not satisfy its constraints.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An output predicate never settled within the simulated horizon.
class NotConvergedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed graph or scenario file. `line` is 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tvgkit
