#pragma once

#include <stdexcept>
#include <string>

namespace cabling {

// Raised for inputs outside the mathematical domain of an operation. `source`
// names the result whose hypotheses were violated.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string source, const std::string& what)
      : std::runtime_error(what), source_(std::move(source)) {}
  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

class UnsupportedArity : public DomainError {
 public:
  using DomainError::DomainError;
};

class InsufficientData : public DomainError {
 public:
  using DomainError::DomainError;
};

class WindowClosed : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cabling
