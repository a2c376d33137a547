#pragma once

#include "bpsis/model.hpp"

namespace bpsis {

/// Posterior probabilities of being susceptible given the received signal.
/// The infected posteriors are the complements.
struct Beliefs {
  double s_given_sbar = 1.0;
  double s_given_ibar = 0.0;
  // Set when the corresponding signal has probability zero under the prior
  // and the posterior was filled in by convention instead of Bayes' rule.
  bool degenerate_sbar = false;
  bool degenerate_ibar = false;

  double i_given_sbar() const { return 1.0 - s_given_sbar; }
  double i_given_ibar() const { return 1.0 - s_given_ibar; }
};

/// Bayes update with prior P[I] = clamp(kappa * y, 0, 1).
///
/// Zero-probability signals: if the prior is certain (0 or 1) the posterior
/// equals the prior. Otherwise both likelihoods of the signal vanish and the
/// posterior is the limit as the signal's true-positive rate goes to zero
/// from above, i.e. the signal still identifies its own state:
/// P[S | S-bar] = 1, P[S | I-bar] = 0.
Beliefs posterior(double y, const SignalScheme& s);

}  // namespace bpsis
