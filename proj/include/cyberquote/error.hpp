#pragma once

#include <stdexcept>
#include <string>

namespace cyberquote {

// Base of every error the library raises. The CLI maps each subclass to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text: CSV rows, config strings, assessment files.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Inputs that parse but break a model invariant (unknown ids, out-of-range values).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownEntityError : public ValidationError {
 public:
  explicit UnknownEntityError(const std::string& id)
      : ValidationError("unknown entity: " + id), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class UnknownPracticeError : public ValidationError {
 public:
  explicit UnknownPracticeError(const std::string& id)
      : ValidationError("unknown practice: " + id), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

// A layer with positive expected loss but zero effective limit (m * kappa == 0).
class UninsurableLayerError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Arguments outside a function's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Solver non-convergence, overflow guards, undefined ratios.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyberquote
