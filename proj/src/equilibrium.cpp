#include "bpsis/equilibrium.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bpsis/bisect.hpp"
#include "bpsis/errors.hpp"
#include "bpsis/payoffs.hpp"

namespace bpsis {

std::string_view to_string(CaseId c) {
  switch (c) {
    case CaseId::FidE1: return "FID_E1";
    case CaseId::FidE2: return "FID_E2";
    case CaseId::FidE3: return "FID_E3";
    case CaseId::Pid1: return "PID_1";
    case CaseId::Pid2: return "PID_2";
    case CaseId::Pid3: return "PID_3";
    case CaseId::Pid4: return "PID_4";
    case CaseId::Pid5: return "PID_5";
    case CaseId::Numeric: return "NUMERIC";
  }
  return "UNKNOWN";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

SignalScheme truthful_infected(double mu_s) { return {mu_s, 1.0, 1.0}; }

double critical_cost(const ModelParams& p) {
  return p.big_l * (1.0 - p.alpha) * (p.beta_u - p.gamma);
}

// Evaluates inequalities where values closer than kTieTol count as equal.
// Any tie that decides an inequality is remembered.
class TieAware {
 public:
  bool less(double a, double b) { return tie(a, b) || a < b; }
  bool greater(double a, double b) { return tie(a, b) || a > b; }
  bool boundary() const { return boundary_; }

 private:
  bool tie(double a, double b) {
    if (std::isnan(a) || std::isnan(b)) return false;
    if (std::abs(a - b) <= kTieTol) {
      boundary_ = true;
      return true;
    }
    return false;
  }
  bool boundary_ = false;
};

void require_assumption1(const ModelParams& p, const SignalScheme& s) {
  const auto report = validate_params(p, s);
  std::ostringstream msg;
  if (!report.ok()) {
    msg << "invalid parameters:";
    for (const auto& v : report.violations) msg << ' ' << v << ';';
    throw AssumptionViolation(msg.str());
  }
  if (!report.assumption1) {
    msg << "classifier assumptions violated:";
    if (!(p.c_p < p.c_u)) msg << " c_p >= c_u;";
    if (!(p.gamma < p.alpha * p.beta_p)) msg << " gamma >= alpha*beta_p;";
    if (s.mu_i != 1.0) msg << " mu_i != 1;";
    throw AssumptionViolation(msg.str());
  }
}

}  // namespace

Thresholds thresholds(const ModelParams& p) {
  Thresholds t;
  t.y_star_u = 1.0 - p.gamma / p.beta_p;
  t.y_star_int = p.c_p / (p.big_l * (1.0 - p.alpha) * p.beta_p);
  t.y_star_p = 1.0 - p.gamma / (p.alpha * p.beta_p);

  const double crit = critical_cost(p);
  const double den = p.gamma * (p.c_p - crit);
  if (std::abs(p.c_p - crit) <= kTieTol) {
    t.mu_s_min = kNaN;
    t.mu_s_min_defined = false;
    t.boundary = true;
  } else {
    t.mu_s_min = 1.0 - (p.beta_u - p.gamma) * (p.c_u - p.c_p) / den;
  }
  t.mu_s_min_applicable = t.mu_s_min_defined && p.c_p > crit;
  t.mu_s_max = find_mu_s_max(p);
  return t;
}

GH g_and_h(double z_ibar, double mu_s, const ModelParams& p) {
  const double y = endemic_equilibrium(1.0, z_ibar, truthful_infected(mu_s), p);
  GH r;
  r.h = (1.0 - p.alpha) * p.big_l * (p.beta_p + (p.beta_u - p.beta_p) * z_ibar) * y - p.c_p;
  r.g = y * (p.c_u - p.c_p) - (1.0 - mu_s) * (1.0 - y) * (-r.h);
  return r;
}

double find_mu_s_max(const ModelParams& p) {
  if (g_and_h(0.0, 0.0, p).g >= 0.0) return 0.0;
  return bisect([&](double mu) { return g_and_h(0.0, mu, p).g; }, 0.0, 1.0, kRootTol);
}

double find_z_dagger_ibar(double mu_s, const ModelParams& p) {
  const double g0 = g_and_h(0.0, mu_s, p).g;
  const double g1 = g_and_h(1.0, mu_s, p).g;
  if (!(g0 < 0.0 && g1 > 0.0)) {
    std::ostringstream msg;
    msg << "not in case 4: need g(0) < 0 < g(1), got g(0)=" << g0 << ", g(1)=" << g1;
    throw NotInCase(msg.str());
  }
  return bisect([&](double z) { return g_and_h(z, mu_s, p).g; }, 0.0, 1.0, kRootTol);
}

ZDaggerSbar z_dagger_sbar(double mu_s, const ModelParams& p) {
  if (mu_s == 0.0) throw std::domain_error("z_dagger_sbar: mu_s must be > 0");
  const double y_int = p.c_p / (p.big_l * (1.0 - p.alpha) * p.beta_p);
  ZDaggerSbar r;
  r.value = (p.gamma - p.alpha * p.beta_p * (1.0 - y_int)) /
            (p.beta_p * (1.0 - p.alpha) * (1.0 - y_int) * mu_s);
  r.in_range = r.value > 0.0 && r.value < 1.0;
  return r;
}

SneResult classify_sne(const ModelParams& p, const SignalScheme& s) {
  require_assumption1(p, s);
  const double mu = s.mu_s;
  const Thresholds th = thresholds(p);
  const SignalScheme scheme = truthful_infected(mu);
  const double y_ee10 = endemic_equilibrium(1.0, 0.0, scheme, p);
  const double crit = critical_cost(p);
  const double g0 = g_and_h(0.0, mu, p).g;
  const double g1 = g_and_h(1.0, mu, p).g;

  SneResult r;
  r.certificates = {{"y_star_p", th.y_star_p},     {"y_star_int", th.y_star_int},
                    {"y_star_u", th.y_star_u},     {"y_ee_1_0", y_ee10},
                    {"mu_s_max", th.mu_s_max},     {"mu_s_min", th.mu_s_min},
                    {"c_p_critical", crit},        {"g_0", g0},
                    {"g_1", g1}};

  const auto finish = [&](CaseId id, PopulationState x, const TieAware& t) {
    r.case_id = id;
    r.state = x;
    r.boundary = t.boundary();
    return r;
  };

  if (TieAware t; t.greater(th.y_star_p, th.y_star_int)) {
    return finish(CaseId::Pid1, {th.y_star_p, 0.0, 0.0}, t);
  }
  if (TieAware t; t.less(th.y_star_p, th.y_star_int) && t.less(th.y_star_int, y_ee10)) {
    const double z = z_dagger_sbar(mu, p).value;
    return finish(CaseId::Pid2, {th.y_star_int, z, 0.0}, t);
  }
  if (TieAware t; t.greater(mu, th.mu_s_max) && t.less(y_ee10, th.y_star_int)) {
    return finish(CaseId::Pid3, {y_ee10, 1.0, 0.0}, t);
  }
  if (TieAware t; t.less(mu, th.mu_s_max) &&
                  ((t.greater(p.c_p, crit) && t.greater(mu, th.mu_s_min)) || t.less(p.c_p, crit))) {
    double z = 0.0;
    if (g0 >= 0.0) {
      z = 0.0;
    } else if (g1 <= 0.0) {
      z = 1.0;
    } else {
      z = find_z_dagger_ibar(mu, p);
    }
    return finish(CaseId::Pid4, {endemic_equilibrium(1.0, z, scheme, p), 1.0, z}, t);
  }
  if (TieAware t; t.greater(p.c_p, crit) && t.less(mu, th.mu_s_min)) {
    return finish(CaseId::Pid5, {endemic_equilibrium(1.0, 1.0, scheme, p), 1.0, 1.0}, t);
  }
  std::ostringstream msg;
  msg << "no SNE case matched for c_p=" << p.c_p << ", mu_s=" << mu;
  throw NoCaseMatched(msg.str());
}

SneResult classify_fid(const ModelParams& p) {
  require_assumption1(p, {1.0, 1.0, 1.0});
  const double y_u = 1.0 - p.gamma / p.beta_p;
  const double y_int = p.c_p / (p.big_l * (1.0 - p.alpha) * p.beta_p);
  const double y_p = 1.0 - p.gamma / (p.alpha * p.beta_p);

  SneResult r;
  r.certificates = {{"y_star_p", y_p}, {"y_star_int", y_int}, {"y_star_u", y_u}};
  const auto finish = [&](CaseId id, PopulationState x, const TieAware& t) {
    r.case_id = id;
    r.state = x;
    r.boundary = t.boundary();
    return r;
  };

  if (TieAware t; t.less(y_u, y_int)) return finish(CaseId::FidE1, {y_u, 1.0, 0.0}, t);
  if (TieAware t; t.less(y_p, y_int) && t.less(y_int, y_u)) {
    const double z = (p.gamma / (p.beta_p * (1.0 - y_int)) - p.alpha) / (1.0 - p.alpha);
    return finish(CaseId::FidE2, {y_int, z, 0.0}, t);
  }
  if (TieAware t; t.greater(y_p, y_int)) return finish(CaseId::FidE3, {y_p, 0.0, 0.0}, t);
  throw NoCaseMatched("no FID case matched");
}

namespace {

ConditionCheck strategy_condition(double z, double du, double tol) {
  if (z < -tol || z > 1.0 + tol) {
    return {false, z < 0.0 ? -z : z - 1.0};
  }
  double residual = 0.0;
  if (z <= tol) {
    residual = du < 0.0 ? -du : 0.0;
  } else if (z >= 1.0 - tol) {
    residual = du > 0.0 ? du : 0.0;
  } else {
    residual = std::abs(du);
  }
  return {residual <= tol, residual};
}

}  // namespace

Verdict verify_sne(const PopulationState& x, const ModelParams& p, const SignalScheme& s,
                   double tol) {
  Verdict v;
  try {
    v.y_ee = endemic_equilibrium(x.z_sbar, x.z_ibar, s, p);
    v.endemic.residual = std::abs(x.y - v.y_ee);
  } catch (const NonEndemicError&) {
    v.y_ee = kNaN;
    v.endemic.residual = std::numeric_limits<double>::infinity();
  }
  v.endemic.ok = x.y > 0.0 && x.y <= 1.0 && v.endemic.residual <= tol;

  const auto t = utilities(x, s, p);
  v.du_sbar = t.du_sbar;
  v.du_ibar = t.du_ibar;
  v.sbar = strategy_condition(x.z_sbar, t.du_sbar, tol);
  v.ibar = strategy_condition(x.z_ibar, t.du_ibar, tol);
  v.pass = v.endemic.ok && v.sbar.ok && v.ibar.ok;
  return v;
}

}  // namespace bpsis
