#include <algorithm>
#include <cmath>

#include "bpsis/equilibrium.hpp"

namespace bpsis {

namespace {

double distance(const PopulationState& a, const PopulationState& b) {
  return std::max({std::abs(a.y - b.y), std::abs(a.z_sbar - b.z_sbar),
                   std::abs(a.z_ibar - b.z_ibar)});
}

}  // namespace

NumericSneReport numeric_sne(const ModelParams& p, const SignalScheme& s,
                             const std::vector<PopulationState>& initial, DynamicsConfig cfg,
                             double verify_tol) {
  cfg.rule = RevisionRule::Smith;
  NumericSneReport report;
  for (const auto& x0 : initial) {
    const Trace tr = integrate(x0, p, s, cfg);
    if (!tr.converged) {
      report.failures.push_back({x0, tr.final, "did not converge by t_max"});
      continue;
    }
    const Verdict v = verify_sne(tr.final, p, s, verify_tol);
    if (!v.pass) {
      report.failures.push_back({x0, tr.final, "limit failed SNE verification"});
      continue;
    }
    const bool seen = std::any_of(report.equilibria.begin(), report.equilibria.end(),
                                  [&](const SneResult& r) { return distance(r.state, tr.final) <= 1e-6; });
    if (seen) continue;
    SneResult r;
    r.case_id = CaseId::Numeric;
    r.state = tr.final;
    r.certificates = {{"t_converge", tr.t_converge},
                      {"endemic_residual", v.endemic.residual},
                      {"sbar_residual", v.sbar.residual},
                      {"ibar_residual", v.ibar.residual}};
    report.equilibria.push_back(std::move(r));
  }
  return report;
}

}  // namespace bpsis
