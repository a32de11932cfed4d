#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace holo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Argument at or too close to a pole, or outside a function's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A recurrence denominator vanishes (or its ball contains zero) at `index`.
class DenominatorError : public Error {
 public:
  DenominatorError(const std::string& what, uint64_t index)
      : Error(what), index_(index) {}
  uint64_t index() const { return index_; }

 private:
  uint64_t index_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line) : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace holo
