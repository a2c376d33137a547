#include "bpsis/payoffs.hpp"

namespace bpsis {

Rewards rewards(const PopulationState& x, const SignalScheme& s, const ModelParams& p) {
  const auto m = action_marginals(x, s);
  Rewards f;
  f.s_u = -p.big_l * (m.z_i * p.beta_u + (1.0 - m.z_i) * p.beta_p) * x.y;
  f.s_p = -p.c_p + p.alpha * f.s_u;
  f.i_u = -p.c_u;
  f.i_p = -p.c_p;
  return f;
}

PayoffTable utilities(const PopulationState& x, const SignalScheme& s, const ModelParams& p) {
  PayoffTable t;
  t.f = rewards(x, s, p);
  t.beliefs = posterior(x.y, s);

  const auto expected = [&](double pi_s, double f_s, double f_i) {
    return pi_s * f_s + (1.0 - pi_s) * f_i;
  };
  const double ps = t.beliefs.s_given_sbar;
  const double pi = t.beliefs.s_given_ibar;
  t.u_sbar_p = expected(ps, t.f.s_p, t.f.i_p);
  t.u_sbar_u = expected(ps, t.f.s_u, t.f.i_u);
  t.u_ibar_p = expected(pi, t.f.s_p, t.f.i_p);
  t.u_ibar_u = expected(pi, t.f.s_u, t.f.i_u);
  t.du_sbar = t.u_sbar_p - t.u_sbar_u;
  t.du_ibar = t.u_ibar_p - t.u_ibar_u;
  return t;
}

}  // namespace bpsis
