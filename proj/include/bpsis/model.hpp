#pragma once

// SIS epidemic with signal-dependent protection adoption.
//
// Agents do not know whether they are susceptible (S) or infected (I). A
// signalling scheme tells each agent either S-bar or I-bar; mu_s is the
// probability a susceptible agent is told S-bar and mu_i the probability an
// infected agent is told I-bar. The population state is (y, z_sbar, z_ibar):
// the infected fraction and the unprotected fractions among recipients of
// each signal.

#include <string>
#include <vector>

namespace bpsis {

struct ModelParams {
  double alpha = 0.45;   // protection effectiveness factor, (0,1)
  double beta_p = 0.5;   // transmission rate of a protected infected agent
  double beta_u = 0.65;  // transmission rate of an unprotected infected agent
  double gamma = 0.2;    // recovery rate
  double big_l = 80.0;   // loss upon infection
  double c_p = 15.0;     // cost of protection
  double c_u = 22.0;     // expected penalty on unprotected infected agents

  /// Baseline parameter table used throughout the numerical experiments,
  /// with the protection cost left free.
  static ModelParams baseline(double c_p);
};

struct SignalScheme {
  double mu_s = 0.8;   // P[S-bar | S]
  double mu_i = 1.0;   // P[I-bar | I]
  double kappa = 1.0;  // agents use clamp(kappa * y) as their prior
};

struct PopulationState {
  double y = 0.0;
  double z_sbar = 0.0;
  double z_ibar = 0.0;

  friend bool operator==(const PopulationState&, const PopulationState&) = default;
};

/// Unprotected fractions among the truly susceptible and truly infected.
struct ActionMarginals {
  double z_s = 0.0;
  double z_i = 0.0;
};

struct ValidationReport {
  std::vector<std::string> violations;  // one entry per violated range constraint
  bool assumption1 = false;             // c_p < c_u, gamma < alpha*beta_p, mu_i = 1

  bool ok() const { return violations.empty(); }
};

ValidationReport validate_params(const ModelParams& p, const SignalScheme& s);

ActionMarginals action_marginals(double z_sbar, double z_ibar, const SignalScheme& s);
inline ActionMarginals action_marginals(const PopulationState& x, const SignalScheme& s) {
  return action_marginals(x.z_sbar, x.z_ibar, s);
}

/// beta_eff = (beta_p (1 - z_i) + beta_u z_i) (alpha (1 - z_s) + z_s).
double effective_beta(double z_sbar, double z_ibar, const SignalScheme& s, const ModelParams& p);
inline double effective_beta(const PopulationState& x, const SignalScheme& s,
                             const ModelParams& p) {
  return effective_beta(x.z_sbar, x.z_ibar, s, p);
}

/// y_EE = 1 - gamma / beta_eff. Throws NonEndemicError when gamma >= beta_eff.
double endemic_equilibrium(double z_sbar, double z_ibar, const SignalScheme& s,
                           const ModelParams& p);

/// dy/dt = ((1 - y) beta_eff - gamma) y.
double sis_vector_field(const PopulationState& x, const SignalScheme& s, const ModelParams& p);

}  // namespace bpsis
