#include "bpsis/beliefs.hpp"

#include <algorithm>

namespace bpsis {

namespace {

// P[S | x] given the likelihoods P[x | S], P[x | I] and the prior P[I].
// `fallback` is the posterior when the prior is interior but both
// likelihoods are zero.
double bayes_s(double lik_s, double lik_i, double prior, double fallback, bool& degenerate) {
  const double num = lik_s * (1.0 - prior);
  const double den = lik_i * prior + num;
  if (den > 0.0) {
    degenerate = false;
    return num / den;
  }
  degenerate = true;
  if (prior <= 0.0) return 1.0;
  if (prior >= 1.0) return 0.0;
  return fallback;
}

}  // namespace

Beliefs posterior(double y, const SignalScheme& s) {
  const double prior = std::clamp(s.kappa * y, 0.0, 1.0);
  Beliefs b;
  b.s_given_sbar = bayes_s(s.mu_s, 1.0 - s.mu_i, prior, 1.0, b.degenerate_sbar);
  b.s_given_ibar = bayes_s(1.0 - s.mu_s, s.mu_i, prior, 0.0, b.degenerate_ibar);
  return b;
}

}  // namespace bpsis
