#pragma once

#include <stdexcept>
#include <string>

namespace nilgeo {

/// Input outside an operation's mathematical domain (zero vector, negative
/// length, coincident points where distinct ones are required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A caller-checkable precondition did not hold (e.g. bisection endpoints
/// that do not straddle the target value).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The boundary-value solver found no admissible geodesic.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}

  /// Smallest endpoint miss distance seen over all starts.
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace nilgeo
