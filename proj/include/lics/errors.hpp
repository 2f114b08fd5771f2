#pragma once

#include <stdexcept>
#include <string>

namespace lics {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates a physical invariant (e.g. a negative ionization rate).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An argument has the wrong shape or basis for the requested operation.
class UsageError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (off-manifold detuning, bad tolerance, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class IntegrationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  // 0 when the error is not tied to a specific line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace lics
