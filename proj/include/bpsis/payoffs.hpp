#pragma once

#include "bpsis/beliefs.hpp"
#include "bpsis/model.hpp"

namespace bpsis {

/// Instantaneous rewards F[r, a] for true state r and action a.
struct Rewards {
  double s_u = 0.0;
  double s_p = 0.0;
  double i_u = 0.0;
  double i_p = 0.0;
};

/// Rewards, signal-conditioned utilities U[x, a] and the decision margins
/// du_x = U[x, P] - U[x, U], all evaluated at one population state.
/// A positive margin means protection is strictly preferred.
struct PayoffTable {
  Rewards f;
  double u_sbar_p = 0.0;
  double u_sbar_u = 0.0;
  double u_ibar_p = 0.0;
  double u_ibar_u = 0.0;
  double du_sbar = 0.0;
  double du_ibar = 0.0;
  Beliefs beliefs;
};

Rewards rewards(const PopulationState& x, const SignalScheme& s, const ModelParams& p);

PayoffTable utilities(const PopulationState& x, const SignalScheme& s, const ModelParams& p);

}  // namespace bpsis
