#pragma once

// Coupled epidemic / strategy-revision dynamics.
//
// The infected fraction follows the SIS field; the unprotected fractions
// z_sbar, z_ibar follow either the Smith (pairwise comparison) dynamic or
// the logit mean dynamic, both driven by the payoff table evaluated at the
// same state snapshot.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bpsis/model.hpp"

namespace bpsis {

enum class RevisionRule { Smith, Logit };

std::string_view to_string(RevisionRule r);
RevisionRule parse_rule(std::string_view name);  // throws ConfigError

struct DynamicsConfig {
  RevisionRule rule = RevisionRule::Smith;
  double lambda = 10.0;  // logit rationality; ignored by Smith
  double dt = 0.01;
  double t_max = 5000.0;
  double conv_tol = 1e-9;  // sup-norm threshold on the coupled field
  std::size_t record_stride = 100;
};

/// Empty when valid; otherwise one message per violated constraint.
std::vector<std::string> validate(const DynamicsConfig& cfg);

struct StrategyRates {
  double dz_sbar = 0.0;
  double dz_ibar = 0.0;
};

/// Smith dynamic written in terms of the margins du = U[P] - U[U]:
/// dz/dt = (1 - z) [-du]_+ - z [du]_+.
StrategyRates smith_field(double du_sbar, double du_ibar, const PopulationState& x);

/// Logit mean dynamic for one signal: dz/dt = softchoice(U) - z, with
/// softchoice(U) = exp(lambda u_u) / (exp(lambda u_u) + exp(lambda u_p)).
double logit_field(double u_u, double u_p, double z, double lambda);

struct StateRates {
  double dy = 0.0;
  double dz_sbar = 0.0;
  double dz_ibar = 0.0;

  double sup_norm() const;
};

StateRates coupled_field(const PopulationState& x, const ModelParams& p, const SignalScheme& s,
                         const DynamicsConfig& cfg);

struct Trace {
  std::vector<double> times;
  std::vector<PopulationState> states;
  bool converged = false;
  double t_converge = 0.0;  // NaN when not converged
  PopulationState final;
  std::size_t steps = 0;
  double max_clamp = 0.0;  // largest per-coordinate correction applied by clamping
};

/// Classic RK4 with fixed step, clamping each coordinate to [0,1] after
/// every step. Stops at the first step where the coupled field's sup-norm
/// drops below conv_tol (checked at t = 0 as well), or at t_max.
Trace integrate(const PopulationState& initial, const ModelParams& p, const SignalScheme& s,
                const DynamicsConfig& cfg);

}  // namespace bpsis
