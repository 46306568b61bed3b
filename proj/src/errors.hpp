#pragma once

#include <stdexcept>
#include <string>

namespace anyonic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument against an otherwise valid object (unknown charge handle,
/// index out of range, sector mismatch, probability outside [0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Model data violates a structural invariant (fusion rules, quantum
/// dimensions, F consistency).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Operator fails a state invariant (Hermiticity, positivity, normalization).
class StateError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver hit its cap; carries the worst constraint residual.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double worst_residual, long iterations)
      : Error(what), worst_residual_(worst_residual), iterations_(iterations) {}
  double worst_residual() const { return worst_residual_; }
  long iterations() const { return iterations_; }

 private:
  double worst_residual_;
  long iterations_;
};

}  // namespace anyonic
