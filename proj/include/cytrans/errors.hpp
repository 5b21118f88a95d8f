#pragma once

#include <stdexcept>
#include <string>

namespace cytrans {

// Base class for every failure the library reports. Anything derived from it
// is a domain error (CLI exit code 1); usage errors are handled by the CLI.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Raised when a Groebner computation exceeds its pair-reduction budget.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

class PositiveDimensional : public Error {
 public:
  using Error::Error;
};

class InconsistentData : public Error {
 public:
  using Error::Error;
};

}  // namespace cytrans
