#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace implicount {

// Base of every error raised by the library. `kind()` is a short stable tag
// used by the CLI for its one-line machine-parseable diagnostics.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

// Errors caused by bad input or an inconsistent oracle.
class DomainError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public DomainError {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : DomainError("at offset " + std::to_string(position) + ": " + message), position_(position) {}
  const char* kind() const noexcept override { return "syntax"; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class AmbiguityError : public DomainError {
 public:
  AmbiguityError(std::size_t position, const std::string& message)
      : DomainError("at offset " + std::to_string(position) + ": " + message), position_(position) {}
  const char* kind() const noexcept override { return "ambiguous"; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class VariableOrderError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "variable-order"; }
};

class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "range"; }
};

class InconsistentOracleError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "inconsistent-oracle"; }
};

class SeriesError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "series"; }
};

class UnsupportedBranchError : public DomainError {
 public:
  using DomainError::DomainError;
  const char* kind() const noexcept override { return "unsupported-branch"; }
};

// A configurable size guard rejected the request before any work started.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, unsigned requested, unsigned limit)
      : Error(what + ": n = " + std::to_string(requested) + " exceeds guard " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}
  const char* kind() const noexcept override { return "resource-limit"; }
  unsigned requested() const noexcept { return requested_; }
  unsigned limit() const noexcept { return limit_; }

 private:
  unsigned requested_;
  unsigned limit_;
};

}  // namespace implicount
