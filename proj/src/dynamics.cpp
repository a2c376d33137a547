#include "bpsis/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bpsis/errors.hpp"
#include "bpsis/payoffs.hpp"

namespace bpsis {

std::string_view to_string(RevisionRule r) {
  return r == RevisionRule::Smith ? "smith" : "logit";
}

RevisionRule parse_rule(std::string_view name) {
  if (name == "smith") return RevisionRule::Smith;
  if (name == "logit") return RevisionRule::Logit;
  throw ConfigError("unknown revision rule '" + std::string(name) + "' (expected smith|logit)");
}

std::vector<std::string> validate(const DynamicsConfig& cfg) {
  std::vector<std::string> v;
  if (!(cfg.dt > 0.0)) v.emplace_back("dt must be > 0");
  if (!(cfg.t_max >= cfg.dt)) v.emplace_back("t_max must be >= dt");
  if (!(cfg.conv_tol > 0.0)) v.emplace_back("conv_tol must be > 0");
  if (cfg.record_stride == 0) v.emplace_back("record_stride must be >= 1");
  if (cfg.rule == RevisionRule::Logit && !(cfg.lambda > 0.0))
    v.emplace_back("lambda must be > 0 for the logit rule");
  return v;
}

namespace {

double pos(double a) { return a > 0.0 ? a : 0.0; }

double smith_one(double du, double z) { return (1.0 - z) * pos(-du) - z * pos(du); }

}  // namespace

StrategyRates smith_field(double du_sbar, double du_ibar, const PopulationState& x) {
  return {smith_one(du_sbar, x.z_sbar), smith_one(du_ibar, x.z_ibar)};
}

double logit_field(double u_u, double u_p, double z, double lambda) {
  const double a = lambda * u_u;
  const double b = lambda * u_p;
  const double m = std::max(a, b);
  const double ea = std::exp(a - m);
  const double eb = std::exp(b - m);
  return ea / (ea + eb) - z;
}

double StateRates::sup_norm() const {
  return std::max({std::abs(dy), std::abs(dz_sbar), std::abs(dz_ibar)});
}

StateRates coupled_field(const PopulationState& x, const ModelParams& p, const SignalScheme& s,
                         const DynamicsConfig& cfg) {
  const auto t = utilities(x, s, p);
  StateRates r;
  r.dy = sis_vector_field(x, s, p);
  if (cfg.rule == RevisionRule::Smith) {
    const auto z = smith_field(t.du_sbar, t.du_ibar, x);
    r.dz_sbar = z.dz_sbar;
    r.dz_ibar = z.dz_ibar;
  } else {
    r.dz_sbar = logit_field(t.u_sbar_u, t.u_sbar_p, x.z_sbar, cfg.lambda);
    r.dz_ibar = logit_field(t.u_ibar_u, t.u_ibar_p, x.z_ibar, cfg.lambda);
  }
  return r;
}

namespace {

PopulationState axpy(const PopulationState& x, double h, const StateRates& k) {
  return {x.y + h * k.dy, x.z_sbar + h * k.dz_sbar, x.z_ibar + h * k.dz_ibar};
}

double clamp_unit(double& v) {
  const double c = std::clamp(v, 0.0, 1.0);
  const double moved = std::abs(c - v);
  v = c;
  return moved;
}

}  // namespace

Trace integrate(const PopulationState& initial, const ModelParams& p, const SignalScheme& s,
                const DynamicsConfig& cfg) {
  Trace tr;
  tr.t_converge = std::numeric_limits<double>::quiet_NaN();
  PopulationState x = initial;
  tr.times.push_back(0.0);
  tr.states.push_back(x);

  const auto max_steps = static_cast<std::size_t>(std::floor(cfg.t_max / cfg.dt + 1e-9));
  const double h = cfg.dt;
  StateRates k1 = coupled_field(x, p, s, cfg);
  std::size_t step = 0;
  if (k1.sup_norm() < cfg.conv_tol) {
    tr.converged = true;
    tr.t_converge = 0.0;
  }
  while (!tr.converged && step < max_steps) {
    const StateRates k2 = coupled_field(axpy(x, h / 2, k1), p, s, cfg);
    const StateRates k3 = coupled_field(axpy(x, h / 2, k2), p, s, cfg);
    const StateRates k4 = coupled_field(axpy(x, h, k3), p, s, cfg);
    x.y += h / 6 * (k1.dy + 2 * k2.dy + 2 * k3.dy + k4.dy);
    x.z_sbar += h / 6 * (k1.dz_sbar + 2 * k2.dz_sbar + 2 * k3.dz_sbar + k4.dz_sbar);
    x.z_ibar += h / 6 * (k1.dz_ibar + 2 * k2.dz_ibar + 2 * k3.dz_ibar + k4.dz_ibar);
    tr.max_clamp = std::max({tr.max_clamp, clamp_unit(x.y), clamp_unit(x.z_sbar),
                             clamp_unit(x.z_ibar)});
    ++step;

    const double t = static_cast<double>(step) * h;
    k1 = coupled_field(x, p, s, cfg);
    if (k1.sup_norm() < cfg.conv_tol) {
      tr.converged = true;
      tr.t_converge = t;
    }
    if (step % cfg.record_stride == 0 || tr.converged || step == max_steps) {
      tr.times.push_back(t);
      tr.states.push_back(x);
    }
  }
  tr.steps = step;
  tr.final = x;
  return tr;
}

}  // namespace bpsis
