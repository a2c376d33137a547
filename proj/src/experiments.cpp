#include "bpsis/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>

#include "bpsis/errors.hpp"

namespace bpsis {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kAgreeTol = 1e-3;
constexpr double kVerifyTol = 1e-6;

// Evaluates fn(k) for k in [0, n) into a vector ordered by k. fn must not
// throw; every point is independent.
template <class Fn>
std::vector<SweepRow> evaluate(std::size_t n, Fn&& fn, Execution exec) {
  std::vector<SweepRow> rows(n);
  if (exec == Execution::Parallel) {
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < count; ++k) rows[k] = fn(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < n; ++k) rows[k] = fn(k);
  }
  return rows;
}

double sup_distance(const PopulationState& a, const PopulationState& b) {
  return std::max({std::abs(a.y - b.y), std::abs(a.z_sbar - b.z_sbar),
                   std::abs(a.z_ibar - b.z_ibar)});
}

std::optional<double> fid_y(const ModelParams& p) {
  try {
    return classify_fid(p).state.y;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void mark_failed(SweepRow& row, const std::string& status) {
  row.status = status;
  row.y_star = row.z_sbar_star = row.z_ibar_star = kNaN;
}

SweepRow base_row(const ModelParams& p, const SignalScheme& s) {
  SweepRow row;
  row.c_p = p.c_p;
  row.mu_s = s.mu_s;
  row.mu_i = s.mu_i;
  row.kappa = s.kappa;
  row.fid_y_star = fid_y(p);
  return row;
}

SweepRow analytic_row(const ModelParams& p, const SignalScheme& s) {
  SweepRow row = base_row(p, s);
  try {
    const SneResult r = classify_sne(p, s);
    row.case_id = std::string(to_string(r.case_id));
    row.y_star = r.state.y;
    row.z_sbar_star = r.state.z_sbar;
    row.z_ibar_star = r.state.z_ibar;
    if (r.boundary) row.status = "ok-boundary";
  } catch (const std::exception& e) {
    mark_failed(row, std::string("error: ") + e.what());
  }
  return row;
}

// Integrates from base.initial with the given rule. When `verify` is set,
// a converged limit must also pass the SNE check.
SweepRow simulated_row(const ExperimentBase& base, const ModelParams& p, const SignalScheme& s,
                       const DynamicsConfig& cfg, bool verify) {
  SweepRow row = base_row(p, s);
  row.case_id = std::string(to_string(CaseId::Numeric));
  if (cfg.rule == RevisionRule::Logit) row.lambda = cfg.lambda;
  try {
    const Trace tr = integrate(base.initial, p, s, cfg);
    row.y_star = tr.final.y;
    row.z_sbar_star = tr.final.z_sbar;
    row.z_ibar_star = tr.final.z_ibar;
    row.converged = tr.converged;
    if (tr.converged) row.t_converge = tr.t_converge;
    if (!tr.converged) {
      row.status = "non-convergence";
    } else if (verify && !verify_sne(tr.final, p, s, kVerifyTol).pass) {
      row.status = "unverified";
    }
  } catch (const std::exception& e) {
    mark_failed(row, std::string("error: ") + e.what());
  }
  return row;
}

ModelParams with_cost(ModelParams p, double c_p) {
  p.c_p = c_p;
  return p;
}

}  // namespace

SweepMode parse_mode(const std::string& name) {
  if (name == "analytic") return SweepMode::Analytic;
  if (name == "simulate") return SweepMode::Simulate;
  if (name == "both") return SweepMode::Both;
  throw ConfigError("unknown sweep mode '" + name + "' (expected analytic|simulate|both)");
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  if (n < 2) throw ConfigError("grid needs at least 2 points");
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k)
    g[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  g.back() = hi;
  return g;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && hi > lo)) throw ConfigError("log grid needs 0 < lo < hi");
  auto g = linear_grid(std::log(lo), std::log(hi), n);
  for (auto& v : g) v = std::exp(v);
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> default_cp_grid() { return log_grid(1e-7, 21.9, 200); }

std::vector<FiveCaseOutcome> run_five_cases(const ExperimentBase& base) {
  std::vector<FiveCaseOutcome> out(kFiveCaseCosts.size());
  DynamicsConfig cfg = base.dynamics;
  cfg.rule = RevisionRule::Smith;
  std::vector<std::exception_ptr> errors(out.size());
  const auto count = static_cast<long long>(out.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < count; ++k) {
    try {
      FiveCaseOutcome& o = out[k];
      o.c_p = kFiveCaseCosts[k];
      const ModelParams p = with_cost(base.params, o.c_p);
      o.sne = classify_sne(p, base.scheme);
      o.trace = integrate(base.initial, p, base.scheme, cfg);
      o.distance = sup_distance(o.trace.final, o.sne.state);
      o.agrees = o.trace.converged && o.distance <= kAgreeTol;
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

SweepTable five_case_summary(const std::vector<FiveCaseOutcome>& outcomes,
                             const ExperimentBase& base) {
  SweepTable t;
  t.extra_column = "sim_distance";
  for (const auto& o : outcomes) {
    SweepRow row = base_row(with_cost(base.params, o.c_p), base.scheme);
    row.case_id = std::string(to_string(o.sne.case_id));
    row.y_star = o.sne.state.y;
    row.z_sbar_star = o.sne.state.z_sbar;
    row.z_ibar_star = o.sne.state.z_ibar;
    row.converged = o.trace.converged;
    if (o.trace.converged) row.t_converge = o.trace.t_converge;
    row.extra = o.distance;
    if (!o.trace.converged) {
      row.status = "non-convergence";
    } else if (!o.agrees) {
      row.status = "mismatch";
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

SweepTable sweep_cp_mus(const ExperimentBase& base, const std::vector<double>& cp_grid,
                        const std::vector<double>& mu_s_set, SweepMode mode, Execution exec) {
  const std::size_t per_point = mode == SweepMode::Both ? 2 : 1;
  const std::size_t n_cp = cp_grid.size();
  DynamicsConfig cfg = base.dynamics;
  cfg.rule = RevisionRule::Smith;

  SweepTable t;
  t.rows = evaluate(
      mu_s_set.size() * n_cp * per_point,
      [&](std::size_t k) {
        const std::size_t point = k / per_point;
        const bool second = k % per_point == 1;
        SignalScheme s = base.scheme;
        s.mu_s = mu_s_set[point / n_cp];
        const ModelParams p = with_cost(base.params, cp_grid[point % n_cp]);
        if (mode == SweepMode::Simulate || second) return simulated_row(base, p, s, cfg, true);
        return analytic_row(p, s);
      },
      exec);
  return t;
}

SweepTable sweep_prior(const ExperimentBase& base, const std::vector<double>& kappas,
                       const std::vector<double>& cp_grid, Execution exec) {
  DynamicsConfig cfg = base.dynamics;
  cfg.rule = RevisionRule::Smith;
  const std::size_t n_cp = cp_grid.size();
  SweepTable t;
  t.rows = evaluate(
      kappas.size() * n_cp,
      [&](std::size_t k) {
        SignalScheme s = base.scheme;
        s.kappa = kappas[k / n_cp];
        return simulated_row(base, with_cost(base.params, cp_grid[k % n_cp]), s, cfg, true);
      },
      exec);
  return t;
}

SweepTable sweep_logit(const ExperimentBase& base, const std::vector<double>& lambdas,
                       const std::vector<double>& cp_grid, Execution exec) {
  const std::size_t n_cp = cp_grid.size();
  SweepTable t;
  t.extra_column = "smith_y_star";
  t.rows = evaluate(
      lambdas.size() * n_cp,
      [&](std::size_t k) {
        const ModelParams p = with_cost(base.params, cp_grid[k % n_cp]);
        DynamicsConfig logit = base.dynamics;
        logit.rule = RevisionRule::Logit;
        logit.lambda = lambdas[k / n_cp];
        SweepRow row = simulated_row(base, p, base.scheme, logit, false);
        DynamicsConfig smith = base.dynamics;
        smith.rule = RevisionRule::Smith;
        const SweepRow ref = simulated_row(base, p, base.scheme, smith, false);
        if (ref.converged.value_or(false)) row.extra = ref.y_star;
        return row;
      },
      exec);
  return t;
}

SweepTable heatmap_mui_cp(const ExperimentBase& base, const std::vector<double>& mu_i_grid,
                          const std::vector<double>& cp_grid, Execution exec) {
  const std::size_t n_cp = cp_grid.size();
  SweepTable t;
  t.extra_column = "diff";
  t.rows = evaluate(
      mu_i_grid.size() * n_cp,
      [&](std::size_t k) {
        const ModelParams p = with_cost(base.params, cp_grid[k % n_cp]);
        SignalScheme s = base.scheme;
        s.mu_i = mu_i_grid[k / n_cp];
        SignalScheme truthful = s;
        truthful.mu_i = 1.0;
        const SweepRow ref = analytic_row(p, truthful);
        if (s.mu_i == 1.0) {
          SweepRow row = ref;
          if (row.status.starts_with("ok")) row.extra = 0.0;
          return row;
        }
        SweepRow row = base_row(p, s);
        row.case_id = std::string(to_string(CaseId::Numeric));
        try {
          const auto report = numeric_sne(p, s, {base.initial}, base.dynamics, kVerifyTol);
          if (report.equilibria.empty()) {
            const auto& f = report.failures.front();
            row.y_star = f.last.y;
            row.z_sbar_star = f.last.z_sbar;
            row.z_ibar_star = f.last.z_ibar;
            row.converged = f.reason.find("converge") == std::string::npos;
            row.status = row.converged.value() ? "unverified" : "non-convergence";
            return row;
          }
          const SneResult& r = report.equilibria.front();
          row.y_star = r.state.y;
          row.z_sbar_star = r.state.z_sbar;
          row.z_ibar_star = r.state.z_ibar;
          row.converged = true;
          for (const auto& c : r.certificates)
            if (c.name == "t_converge") row.t_converge = c.value;
          if (ref.status.starts_with("ok")) row.extra = ref.y_star - row.y_star;
        } catch (const std::exception& e) {
          mark_failed(row, std::string("error: ") + e.what());
        }
        return row;
      },
      exec);
  return t;
}

}  // namespace bpsis
