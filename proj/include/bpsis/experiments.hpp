#pragma once

// Parameter sweeps reproducing the numerical study: the five equilibrium
// regimes, the c_p x mu_s comparison against full disclosure, prior
// misestimation, bounded rationality (logit) and imperfect infected
// signalling (mu_i < 1).
//
// Every grid point is evaluated independently. `Execution::Parallel` spreads
// points over OpenMP threads; `Execution::Serial` is the reference loop.
// Row order is the grid order in both cases.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bpsis/dynamics.hpp"
#include "bpsis/equilibrium.hpp"
#include "bpsis/model.hpp"

namespace bpsis {

enum class SweepMode { Analytic, Simulate, Both };
enum class Execution { Serial, Parallel };

SweepMode parse_mode(const std::string& name);  // throws ConfigError

struct ExperimentBase {
  ModelParams params;
  SignalScheme scheme;
  DynamicsConfig dynamics;
  PopulationState initial{0.01, 0.5, 0.5};
};

struct SweepRow {
  double c_p = 0.0;
  double mu_s = 0.0;
  double mu_i = 1.0;
  double kappa = 1.0;
  std::optional<double> lambda;
  std::string case_id;
  double y_star = 0.0;
  double z_sbar_star = 0.0;
  double z_ibar_star = 0.0;
  std::optional<double> fid_y_star;
  std::optional<bool> converged;
  std::optional<double> t_converge;
  std::string status = "ok";
  std::optional<double> extra;  // experiment-specific trailing column
};

struct SweepTable {
  std::string extra_column;  // empty when the experiment has no extra column
  std::vector<SweepRow> rows;
};

std::vector<double> linear_grid(double lo, double hi, std::size_t n);
std::vector<double> log_grid(double lo, double hi, std::size_t n);
/// 200 log-spaced protection costs in [1e-7, 21.9].
std::vector<double> default_cp_grid();

/// Protection costs selecting the five closed-form regimes at mu_s = 0.8.
inline const std::vector<double> kFiveCaseCosts{1.5, 5.0, 15.0, 21.0, 21.85};

struct FiveCaseOutcome {
  double c_p = 0.0;
  SneResult sne;
  Trace trace;
  double distance = 0.0;  // sup-norm between trace.final and sne.state
  bool agrees = false;    // distance <= 1e-3 and the run converged
};

std::vector<FiveCaseOutcome> run_five_cases(const ExperimentBase& base);
/// One row per case; the extra column `sim_distance` holds the distance.
SweepTable five_case_summary(const std::vector<FiveCaseOutcome>& outcomes,
                             const ExperimentBase& base);

SweepTable sweep_cp_mus(const ExperimentBase& base, const std::vector<double>& cp_grid,
                        const std::vector<double>& mu_s_set, SweepMode mode,
                        Execution exec = Execution::Parallel);

/// Simulation only; limits verified with kappa-scaled beliefs.
SweepTable sweep_prior(const ExperimentBase& base, const std::vector<double>& kappas,
                       const std::vector<double>& cp_grid, Execution exec = Execution::Parallel);

/// Logit dynamics; the extra column `smith_y_star` holds the Smith limit.
SweepTable sweep_logit(const ExperimentBase& base, const std::vector<double>& lambdas,
                       const std::vector<double>& cp_grid, Execution exec = Execution::Parallel);

/// Extra column `diff` = y_star(mu_i = 1) - y_star(mu_i). mu_i = 1 rows use
/// the closed-form classifier, the rest the numeric SNE search.
SweepTable heatmap_mui_cp(const ExperimentBase& base, const std::vector<double>& mu_i_grid,
                          const std::vector<double>& cp_grid, Execution exec = Execution::Parallel);

}  // namespace bpsis
