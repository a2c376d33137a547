#pragma once

// Stationary Nash equilibria (SNE) of the persuasion game.
//
// A population state (y, z_sbar, z_ibar) is an SNE when y is the endemic
// equilibrium of the SIS dynamics for the given strategies and no recipient
// of either signal gains by switching action. Under mu_i = 1, c_p < c_u and
// gamma < alpha*beta_p the SNE is unique and falls into one of five closed
// form cases, selected here by `classify_sne`. `verify_sne` checks the
// definition directly and works for any scheme.

#include <string>
#include <string_view>
#include <vector>

#include "bpsis/dynamics.hpp"
#include "bpsis/model.hpp"

namespace bpsis {

/// Tolerance below which a classifying inequality counts as a tie.
inline constexpr double kTieTol = 1e-9;
/// Bisection bracket width for mu_s^max and z_ibar^dagger.
inline constexpr double kRootTol = 1e-10;

enum class CaseId { FidE1, FidE2, FidE3, Pid1, Pid2, Pid3, Pid4, Pid5, Numeric };

std::string_view to_string(CaseId c);

struct Thresholds {
  double y_star_u = 0.0;    // 1 - gamma / beta_p
  double y_star_int = 0.0;  // c_p / (L (1 - alpha) beta_p)
  double y_star_p = 0.0;    // 1 - gamma / (alpha beta_p)
  double mu_s_min = 0.0;    // raw value, may be negative or above 1
  double mu_s_max = 0.0;    // in [0,1)
  // c_p == L (1 - alpha)(beta_u - gamma) (within kTieTol): mu_s_min is NaN.
  bool mu_s_min_defined = true;
  // mu_s_min only enters the classification when c_p > L (1 - alpha)(beta_u - gamma).
  bool mu_s_min_applicable = false;
  bool boundary = false;
};

Thresholds thresholds(const ModelParams& p);

struct GH {
  double h = 0.0;
  double g = 0.0;
};

/// h(z, mu_s) = (1-alpha) L (beta_p + (beta_u-beta_p) z) y_EE(1, z; mu_s) - c_p
/// g(z, mu_s) = y_EE (c_u - c_p) - (1 - mu_s)(1 - y_EE)(-h)
/// Both use mu_i = 1. g has the sign of du_ibar at (y_EE(1, z), 1, z).
GH g_and_h(double z_ibar, double mu_s, const ModelParams& p);

/// 0 if g(0, 0) >= 0, else the root of g(0, .) on (0, 1).
double find_mu_s_max(const ModelParams& p);

/// Root of g(., mu_s) on (0, 1). Throws NotInCase unless g(0) < 0 < g(1).
double find_z_dagger_ibar(double mu_s, const ModelParams& p);

struct ZDaggerSbar {
  double value = 0.0;
  bool in_range = false;  // value in (0, 1)
};

/// Interior unprotected fraction among S-bar recipients that puts the
/// infected fraction at y_star_int. Throws std::domain_error for mu_s = 0.
ZDaggerSbar z_dagger_sbar(double mu_s, const ModelParams& p);

struct Certificate {
  std::string name;
  double value = 0.0;
};

struct SneResult {
  CaseId case_id = CaseId::Numeric;
  PopulationState state;
  bool boundary = false;
  std::vector<Certificate> certificates;
};

/// Closed-form SNE for mu_i = 1. Throws AssumptionViolation if the
/// parameters violate the ranges or the classifier assumptions
/// (c_p < c_u, gamma < alpha*beta_p, mu_i = 1).
SneResult classify_sne(const ModelParams& p, const SignalScheme& s);

/// Closed-form SNE under full information disclosure (mu_s = mu_i = 1).
SneResult classify_fid(const ModelParams& p);

struct ConditionCheck {
  bool ok = false;
  double residual = 0.0;  // amount by which the condition is violated; 0 if satisfied exactly
};

struct Verdict {
  bool pass = false;
  ConditionCheck endemic;
  ConditionCheck sbar;
  ConditionCheck ibar;
  double y_ee = 0.0;  // NaN if the strategies admit no endemic equilibrium
  double du_sbar = 0.0;
  double du_ibar = 0.0;
};

/// Checks the SNE definition at `x`:
///  - y > 0 and |y - y_EE(z_sbar, z_ibar)| <= tol
///  - per signal: z = 0 needs du >= -tol, z = 1 needs du <= tol, interior
///    z needs |du| <= tol.
/// A coordinate within tol of 0 or 1 is judged as sitting on that boundary.
Verdict verify_sne(const PopulationState& x, const ModelParams& p, const SignalScheme& s,
                   double tol);

struct NonConvergence {
  PopulationState initial;
  PopulationState last;
  std::string reason;
};

struct NumericSneReport {
  std::vector<SneResult> equilibria;  // case_id == Numeric, deduplicated
  std::vector<NonConvergence> failures;
};

/// Runs the coupled Smith dynamics from each initial state and keeps the
/// limits that pass verify_sne at `verify_tol`. Limits closer than 1e-6 in
/// sup-norm are merged.
NumericSneReport numeric_sne(const ModelParams& p, const SignalScheme& s,
                             const std::vector<PopulationState>& initial,
                             DynamicsConfig cfg = {}, double verify_tol = 1e-6);

}  // namespace bpsis
