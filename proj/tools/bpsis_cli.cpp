// Command-line front end: classify, fid, simulate, verify and sweep.
//
// Exit codes: 0 ok, 1 verification failed, 2 configuration or usage error,
// 3 classifier assumptions violated, 4 dynamics did not converge.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpsis/config.hpp"
#include "bpsis/equilibrium.hpp"
#include "bpsis/errors.hpp"
#include "bpsis/experiments.hpp"
#include "bpsis/io.hpp"

namespace {

using bpsis::ConfigError;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kAssumption = 3, kNonConvergence = 4 };

struct ExitError {
  int code;
  std::string kind;
  std::string message;
};

std::string kebab(std::string_view key) {
  std::string s(key);
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

// Config flags shared by all subcommands. Sweep grid keys are registered
// separately by the sweep subcommand and skipped here.
struct ConfigFlags {
  std::string config_path;
  std::map<std::string, std::optional<double>> numeric;
  std::optional<std::string> rule;
  std::optional<std::size_t> record_stride;
  std::optional<std::string> out;

  void attach(CLI::App* cmd, const std::vector<std::string>& skip = {}) {
    cmd->add_option("--config", config_path, "flat JSON config file");
    for (auto key : bpsis::numeric_config_keys()) {
      std::string k(key);
      if (std::find(skip.begin(), skip.end(), k) != skip.end()) continue;
      cmd->add_option("--" + kebab(k), numeric[k], k);
    }
    cmd->add_option("--rule", rule, "revision rule (smith|logit)");
    cmd->add_option("--record-stride", record_stride, "record every n-th step");
    cmd->add_option("--out", out, "output path");
  }

  bpsis::RunConfig merge() const {
    bpsis::RunConfig cfg = config_path.empty() ? bpsis::RunConfig{} : bpsis::load_config(config_path);
    for (const auto& [k, v] : numeric)
      if (v) bpsis::set_numeric(cfg, k, *v);
    if (rule) cfg.dynamics.rule = bpsis::parse_rule(*rule);
    if (record_stride) {
      if (*record_stride < 1) throw ConfigError("--record-stride must be >= 1");
      cfg.dynamics.record_stride = *record_stride;
    }
    if (out) cfg.out = *out;
    return cfg;
  }
};

void require_valid(const bpsis::RunConfig& cfg) {
  auto v = bpsis::validate(cfg);
  if (v.empty()) return;
  std::string msg;
  for (const auto& m : v) msg += (msg.empty() ? "" : "; ") + m;
  throw ConfigError(msg);
}

void require_assumption1(const bpsis::ModelParams& p, double mu_i) {
  std::vector<std::string> broken;
  if (!(p.c_p < p.c_u)) broken.emplace_back("c_p < c_u");
  if (!(p.gamma < p.alpha * p.beta_p)) broken.emplace_back("gamma < alpha*beta_p");
  if (mu_i != 1.0) broken.emplace_back("mu_i = 1");
  if (broken.empty()) return;
  std::string msg = "classifier assumptions violated:";
  for (const auto& b : broken) msg += " requires " + b + ";";
  msg.pop_back();
  throw ExitError{kAssumption, "assumption", msg};
}

void warn_boundary(const bpsis::SneResult& r) {
  if (r.boundary)
    std::cerr << "warning: parameters lie on a case boundary (within " << bpsis::kTieTol
              << "); reported case " << bpsis::to_string(r.case_id) << '\n';
}

void print(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open output file " + path);
  return os;
}

double sup_distance(const bpsis::PopulationState& a, const bpsis::PopulationState& b) {
  return std::max({std::abs(a.y - b.y), std::abs(a.z_sbar - b.z_sbar),
                   std::abs(a.z_ibar - b.z_ibar)});
}

ordered_json state_json(const bpsis::PopulationState& x) {
  return {{"y", x.y}, {"z_sbar", x.z_sbar}, {"z_ibar", x.z_ibar}};
}

double parse_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw ConfigError(what + ": cannot parse '" + s + "' as a number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

// "a:b:n" is a linear grid with n points; otherwise a comma-separated list.
std::vector<double> parse_grid(const std::string& spec, const std::string& flag) {
  if (spec.find(':') != std::string::npos) {
    auto parts = split(spec, ':');
    if (parts.size() != 3) throw ConfigError(flag + ": expected a:b:n, got '" + spec + "'");
    double n = parse_number(parts[2], flag);
    if (n < 2 || n != std::floor(n)) throw ConfigError(flag + ": n must be an integer >= 2");
    return bpsis::linear_grid(parse_number(parts[0], flag), parse_number(parts[1], flag),
                              static_cast<std::size_t>(n));
  }
  std::vector<double> g;
  for (const auto& p : split(spec, ',')) g.push_back(parse_number(p, flag));
  if (g.empty()) throw ConfigError(flag + ": empty grid");
  return g;
}

bpsis::PopulationState parse_state(const std::string& spec) {
  auto parts = split(spec, ',');
  if (parts.size() != 3) throw ConfigError("--state: expected y,z_sbar,z_ibar");
  bpsis::PopulationState x{parse_number(parts[0], "--state"), parse_number(parts[1], "--state"),
                           parse_number(parts[2], "--state")};
  for (double v : {x.y, x.z_sbar, x.z_ibar})
    if (v < 0.0 || v > 1.0) throw ConfigError("--state: components must lie in [0,1]");
  return x;
}

int cmd_classify(const bpsis::RunConfig& cfg) {
  require_valid(cfg);
  require_assumption1(cfg.params, cfg.scheme.mu_i);
  auto r = bpsis::classify_sne(cfg.params, cfg.scheme);
  warn_boundary(r);
  ordered_json j;
  j["config"] = bpsis::to_json(cfg);
  j["result"] = bpsis::to_json(r);
  j["thresholds"] = bpsis::to_json(bpsis::thresholds(cfg.params));
  print(j);
  return kOk;
}

int cmd_fid(const bpsis::RunConfig& cfg) {
  require_valid(cfg);
  require_assumption1(cfg.params, 1.0);
  auto r = bpsis::classify_fid(cfg.params);
  warn_boundary(r);
  ordered_json j;
  j["config"] = bpsis::to_json(cfg);
  j["result"] = bpsis::to_json(r);
  print(j);
  return kOk;
}

int cmd_simulate(bpsis::RunConfig cfg) {
  if (cfg.out.empty()) cfg.out = "trace.csv";
  require_valid(cfg);
  auto tr = bpsis::integrate(cfg.initial, cfg.params, cfg.scheme, cfg.dynamics);
  {
    auto os = open_out(cfg.out);
    bpsis::write_trace_csv(os, tr, bpsis::to_json(cfg));
  }
  ordered_json j;
  j["config"] = bpsis::to_json(cfg);
  j["trace"] = cfg.out;
  j["final"] = state_json(tr.final);
  j["converged"] = tr.converged;
  j["t_converge"] = tr.converged ? ordered_json(tr.t_converge) : ordered_json(nullptr);
  j["steps"] = tr.steps;
  j["max_clamp"] = tr.max_clamp;
  if (bpsis::validate_params(cfg.params, cfg.scheme).assumption1) {
    auto r = bpsis::classify_sne(cfg.params, cfg.scheme);
    warn_boundary(r);
    j["sne"] = bpsis::to_json(r);
    j["distance"] = sup_distance(tr.final, r.state);
  }
  print(j);
  if (!tr.converged) {
    std::cerr << "error: dynamics did not converge by t_max=" << cfg.dynamics.t_max << '\n';
    return kNonConvergence;
  }
  return kOk;
}

int cmd_verify(const bpsis::RunConfig& cfg, const std::string& state, double tol) {
  require_valid(cfg);
  auto x = parse_state(state);
  if (!(tol > 0.0)) throw ConfigError("--tol must be > 0");
  auto v = bpsis::verify_sne(x, cfg.params, cfg.scheme, tol);
  ordered_json j;
  j["config"] = bpsis::to_json(cfg);
  j["state"] = state_json(x);
  j["tol"] = tol;
  j["verdict"] = bpsis::to_json(v);
  print(j);
  return v.pass ? kOk : kVerifyFailed;
}

struct SweepFlags {
  std::string experiment;
  std::string mode = "analytic";
  std::optional<std::string> c_p, mu_s, mu_i, kappa, lambda;
};

std::vector<double> grid_or(const std::optional<std::string>& spec, const std::string& flag,
                            std::vector<double> fallback) {
  return spec ? parse_grid(*spec, flag) : std::move(fallback);
}

ordered_json grid_json(const std::vector<double>& g) {
  ordered_json a = ordered_json::array();
  for (double v : g) a.push_back(v);
  return a;
}

void write_table(const std::string& path, const bpsis::SweepTable& t, const ordered_json& meta) {
  auto os = open_out(path);
  bpsis::write_sweep_csv(os, t, meta);
}

int cmd_sweep(bpsis::RunConfig cfg, const SweepFlags& f) {
  if (cfg.out.empty()) cfg.out = f.experiment + ".csv";
  require_valid(cfg);
  bpsis::ExperimentBase base{cfg.params, cfg.scheme, cfg.dynamics, cfg.initial};
  ordered_json meta = bpsis::to_json(cfg);
  meta["experiment"] = f.experiment;

  if (f.experiment == "five-cases") {
    require_assumption1(cfg.params, cfg.scheme.mu_i);
    auto outcomes = bpsis::run_five_cases(base);
    std::filesystem::path out(cfg.out);
    auto stem = (out.parent_path() / out.stem()).string();
    ordered_json files = ordered_json::array();
    bool all_converged = true;
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      auto path = stem + "_case" + std::to_string(k + 1) + ".csv";
      ordered_json m = meta;
      m["c_p"] = outcomes[k].c_p;
      auto os = open_out(path);
      bpsis::write_trace_csv(os, outcomes[k].trace, m);
      files.push_back(path);
      all_converged = all_converged && outcomes[k].trace.converged;
      warn_boundary(outcomes[k].sne);
    }
    meta["c_p"] = grid_json(bpsis::kFiveCaseCosts);
    auto table = bpsis::five_case_summary(outcomes, base);
    write_table(cfg.out, table, meta);
    ordered_json j;
    j["config"] = meta;
    j["summary"] = cfg.out;
    j["traces"] = files;
    j["all_agree"] = std::all_of(outcomes.begin(), outcomes.end(),
                                 [](const auto& o) { return o.agrees; });
    print(j);
    return all_converged ? kOk : kNonConvergence;
  }

  bpsis::SweepTable table;
  if (f.experiment == "cp-mus") {
    auto cps = grid_or(f.c_p, "--c-p", bpsis::default_cp_grid());
    auto mus = grid_or(f.mu_s, "--mu-s", {0.7, 0.8, 0.9, 1.0});
    meta["mode"] = f.mode;
    meta["c_p"] = grid_json(cps);
    meta["mu_s"] = grid_json(mus);
    table = bpsis::sweep_cp_mus(base, cps, mus, bpsis::parse_mode(f.mode));
  } else if (f.experiment == "prior") {
    auto cps = grid_or(f.c_p, "--c-p", bpsis::default_cp_grid());
    auto kappas = grid_or(f.kappa, "--kappa", {0.75, 1.0, 1.25});
    meta["c_p"] = grid_json(cps);
    meta["kappa"] = grid_json(kappas);
    table = bpsis::sweep_prior(base, kappas, cps);
  } else if (f.experiment == "logit") {
    auto cps = grid_or(f.c_p, "--c-p", bpsis::default_cp_grid());
    auto lambdas = grid_or(f.lambda, "--lambda", {1.0, 2.0, 5.0, 10.0});
    for (double l : lambdas)
      if (!(l > 0.0)) throw ConfigError("--lambda values must be > 0");
    meta["c_p"] = grid_json(cps);
    meta["lambda"] = grid_json(lambdas);
    table = bpsis::sweep_logit(base, lambdas, cps);
  } else {
    auto mu_is = grid_or(f.mu_i, "--mu-i", bpsis::linear_grid(0.1, 1.0, 10));
    auto cps = grid_or(f.c_p, "--c-p", bpsis::linear_grid(1.0, 21.0, 21));
    for (double m : mu_is)
      if (!(m > 0.0 && m <= 1.0)) throw ConfigError("--mu-i values must lie in (0,1]");
    meta["mu_i"] = grid_json(mu_is);
    meta["c_p"] = grid_json(cps);
    table = bpsis::heatmap_mui_cp(base, mu_is, cps);
  }
  write_table(cfg.out, table, meta);
  std::size_t not_ok = std::count_if(table.rows.begin(), table.rows.end(),
                                     [](const auto& r) { return !r.status.starts_with("ok"); });
  ordered_json j;
  j["config"] = meta;
  j["out"] = cfg.out;
  j["rows"] = table.rows.size();
  j["rows_not_ok"] = not_ok;
  print(j);
  return kOk;
}

int report(int code, const std::string& kind, const std::string& message) {
  ordered_json j;
  j["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
  std::cout << j.dump() << '\n';
  std::cerr << "error: " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signalling game on an SIS epidemic: equilibria, dynamics and sweeps"};
  app.require_subcommand(1);

  ConfigFlags flags;
  auto* classify = app.add_subcommand("classify", "closed-form equilibrium for mu_i = 1");
  flags.attach(classify);
  auto* fid = app.add_subcommand("fid", "equilibrium under full information disclosure");
  flags.attach(fid);
  auto* simulate = app.add_subcommand("simulate", "integrate the coupled dynamics");
  flags.attach(simulate);

  std::string state;
  double tol = 1e-6;
  auto* verify = app.add_subcommand("verify", "check the equilibrium conditions at a state");
  flags.attach(verify);
  verify->add_option("--state", state, "y,z_sbar,z_ibar")->required();
  verify->add_option("--tol", tol, "tolerance")->capture_default_str();

  SweepFlags sf;
  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and write CSV");
  flags.attach(sweep, {"c_p", "mu_s", "mu_i", "kappa", "lambda"});
  sweep->add_option("experiment", sf.experiment, "five-cases|cp-mus|prior|logit|mui-heatmap")
      ->required()
      ->check(CLI::IsMember({"five-cases", "cp-mus", "prior", "logit", "mui-heatmap"}));
  sweep->add_option("--mode", sf.mode, "analytic|simulate|both (cp-mus)")->capture_default_str();
  sweep->add_option("--c-p", sf.c_p, "grid a:b:n or list");
  sweep->add_option("--mu-s", sf.mu_s, "grid a:b:n or list (cp-mus)");
  sweep->add_option("--mu-i", sf.mu_i, "grid a:b:n or list (mui-heatmap)");
  sweep->add_option("--kappa", sf.kappa, "grid a:b:n or list (prior)");
  sweep->add_option("--lambda", sf.lambda, "grid a:b:n or list (logit)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report(kUsage, "usage", e.what());
  }

  try {
    bpsis::RunConfig cfg = flags.merge();
    if (*classify) return cmd_classify(cfg);
    if (*fid) return cmd_fid(cfg);
    if (*simulate) return cmd_simulate(cfg);
    if (*verify) return cmd_verify(cfg, state, tol);
    if (sweep->parsed()) {
      if (sf.experiment != "cp-mus" && sweep->count("--mode") > 0)
        throw ConfigError("--mode applies to cp-mus only");
      return cmd_sweep(cfg, sf);
    }
  } catch (const ExitError& e) {
    return report(e.code, e.kind, e.message);
  } catch (const ConfigError& e) {
    return report(kUsage, "config", e.what());
  } catch (const bpsis::AssumptionViolation& e) {
    return report(kAssumption, "assumption", e.what());
  } catch (const std::exception& e) {
    return report(kUsage, "error", e.what());
  }
  return kUsage;
}
