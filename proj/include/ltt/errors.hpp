#pragma once

#include <stdexcept>
#include <string>

namespace ltt {

// Input outside a routine's validity region (abscissa at or below the
// exponential order, origin exponent at or below -1, bad parameter ranges).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Adaptive integration ran out of budget before reaching the requested
// tolerance.  `achieved` is the error estimate at the point of giving up.
struct QuadratureFailure : std::runtime_error {
  QuadratureFailure(const std::string& what, double requested_, double achieved_)
      : std::runtime_error(what), requested(requested_), achieved(achieved_) {}
  double requested;
  double achieved;
};

// An image was handed to a routine that needs a different shape of image
// (non-rational where rational is required, polynomial part present, ...).
struct UnsupportedImage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numeric root finding could not certify that the computed roots are
// separated / accurate enough to continue.
struct RootIsolationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The residue form of the inverse produced a term whose t-power falls below
// the probe index, so dividing by t^n would leave a singular factor.  Means
// the supplied rule is not a genuine image sequence.
struct NonCancellingPower : DomainError {
  using DomainError::DomainError;
};

// A recurrence was posed without enough starting values (or rhs entries) to
// pin down the sequence over the requested range.
struct MissingInitialData : DomainError {
  using DomainError::DomainError;
};

// The initial-value fit for the closed-form constants has no unique solution.
struct SingularFit : DomainError {
  using DomainError::DomainError;
};

}  // namespace ltt
