#pragma once

#include <stdexcept>
#include <string>

namespace bpsis {

/// gamma >= beta_eff: the SIS dynamics have no endemic equilibrium.
class NonEndemicError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A bisection was asked to search an interval that does not bracket a root.
class RootNotBracketed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The parameters do not satisfy the preconditions of a closed-form case.
class NotInCase : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Assumption-1 (mu_i = 1, c_p < c_u, gamma < alpha*beta_p) does not hold.
class AssumptionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The equilibrium classifier found no matching case. Should be impossible
/// when the classifier assumptions hold.
class NoCaseMatched : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed or out-of-range configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bpsis
