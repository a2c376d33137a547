#include "bpsis/model.hpp"

#include <cmath>
#include <sstream>

#include "bpsis/errors.hpp"

namespace bpsis {

ModelParams ModelParams::baseline(double c_p) {
  ModelParams p;
  p.c_p = c_p;
  return p;
}

namespace {

void require(std::vector<std::string>& out, bool cond, const char* what) {
  if (!cond) out.emplace_back(what);
}

bool unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

ValidationReport validate_params(const ModelParams& p, const SignalScheme& s) {
  ValidationReport r;
  auto& v = r.violations;
  require(v, std::isfinite(p.alpha) && p.alpha > 0.0 && p.alpha < 1.0, "alpha must lie in (0,1)");
  require(v, std::isfinite(p.beta_p) && p.beta_p > 0.0, "beta_p must be > 0");
  require(v, std::isfinite(p.beta_u) && p.beta_u > p.beta_p, "beta_u must be > beta_p");
  require(v, std::isfinite(p.gamma) && p.gamma > 0.0, "gamma must be > 0");
  require(v, std::isfinite(p.big_l) && p.big_l > 0.0, "big_l must be > 0");
  require(v, std::isfinite(p.c_p) && p.c_p > 0.0, "c_p must be > 0");
  require(v, std::isfinite(p.c_u) && p.c_u > 0.0, "c_u must be > 0");
  require(v, unit_interval(s.mu_s), "mu_s must lie in [0,1]");
  require(v, unit_interval(s.mu_i), "mu_i must lie in [0,1]");
  require(v, std::isfinite(s.kappa) && s.kappa > 0.0, "kappa must be > 0");
  r.assumption1 = p.c_p < p.c_u && p.gamma < p.alpha * p.beta_p && s.mu_i == 1.0;
  return r;
}

ActionMarginals action_marginals(double z_sbar, double z_ibar, const SignalScheme& s) {
  return {z_sbar * s.mu_s + z_ibar * (1.0 - s.mu_s), z_ibar * s.mu_i + z_sbar * (1.0 - s.mu_i)};
}

double effective_beta(double z_sbar, double z_ibar, const SignalScheme& s, const ModelParams& p) {
  const auto m = action_marginals(z_sbar, z_ibar, s);
  return (p.beta_p * (1.0 - m.z_i) + p.beta_u * m.z_i) * (p.alpha * (1.0 - m.z_s) + m.z_s);
}

double endemic_equilibrium(double z_sbar, double z_ibar, const SignalScheme& s,
                           const ModelParams& p) {
  const double beta = effective_beta(z_sbar, z_ibar, s, p);
  if (!(p.gamma < beta)) {
    std::ostringstream msg;
    msg << "no endemic equilibrium: gamma=" << p.gamma << " >= beta_eff=" << beta;
    throw NonEndemicError(msg.str());
  }
  return 1.0 - p.gamma / beta;
}

double sis_vector_field(const PopulationState& x, const SignalScheme& s, const ModelParams& p) {
  return ((1.0 - x.y) * effective_beta(x, s, p) - p.gamma) * x.y;
}

}  // namespace bpsis
