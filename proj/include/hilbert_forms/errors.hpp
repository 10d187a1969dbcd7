#pragma once

#include <stdexcept>
#include <string>

namespace hforms {

// Every failure raised by the library derives from Error, so callers that do
// not care about the category can catch a single type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (s <= 1 for zeta, x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition that is not a plain domain restriction.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegree : public Error {
 public:
  using Error::Error;
};

// The requested series or integral does not converge.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class BracketError : public Error {
 public:
  using Error::Error;
};

// Tolerance could not be met within the budget. Carries the best estimate.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

// An iteration ran out of steps. Carries the last iterate and its residual.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double residual, int iterations)
      : Error(what),
        best_estimate_(best_estimate),
        residual_(residual),
        iterations_(iterations) {}
  double best_estimate() const noexcept { return best_estimate_; }
  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double best_estimate_;
  double residual_;
  int iterations_;
};

}  // namespace hforms
