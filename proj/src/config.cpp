#include "bpsis/config.hpp"

#include <cmath>
#include <fstream>

#include "bpsis/errors.hpp"

namespace bpsis {

namespace {

double* numeric_field(RunConfig& c, std::string_view key) {
  if (key == "alpha") return &c.params.alpha;
  if (key == "beta_p") return &c.params.beta_p;
  if (key == "beta_u") return &c.params.beta_u;
  if (key == "gamma") return &c.params.gamma;
  if (key == "big_l") return &c.params.big_l;
  if (key == "c_p") return &c.params.c_p;
  if (key == "c_u") return &c.params.c_u;
  if (key == "mu_s") return &c.scheme.mu_s;
  if (key == "mu_i") return &c.scheme.mu_i;
  if (key == "kappa") return &c.scheme.kappa;
  if (key == "lambda") return &c.dynamics.lambda;
  if (key == "dt") return &c.dynamics.dt;
  if (key == "t_max") return &c.dynamics.t_max;
  if (key == "conv_tol") return &c.dynamics.conv_tol;
  if (key == "y0") return &c.initial.y;
  if (key == "z_sbar0") return &c.initial.z_sbar;
  if (key == "z_ibar0") return &c.initial.z_ibar;
  return nullptr;
}

}  // namespace

const std::vector<std::string_view>& numeric_config_keys() {
  static const std::vector<std::string_view> keys{
      "alpha", "beta_p", "beta_u",   "gamma", "big_l", "c_p", "c_u",     "mu_s",    "mu_i",
      "kappa", "lambda", "dt",       "t_max", "conv_tol", "y0", "z_sbar0", "z_ibar0"};
  return keys;
}

void set_numeric(RunConfig& cfg, std::string_view key, double value) {
  double* field = numeric_field(cfg, key);
  if (!field) throw ConfigError("unknown config key '" + std::string(key) + "'");
  *field = value;
}

void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config must be a flat JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "rule") {
      if (!value.is_string()) throw ConfigError("config key 'rule' must be a string");
      cfg.dynamics.rule = parse_rule(value.get<std::string>());
    } else if (key == "out") {
      if (!value.is_string()) throw ConfigError("config key 'out' must be a string");
      cfg.out = value.get<std::string>();
    } else if (key == "record_stride") {
      if (!value.is_number_integer() || value.get<long long>() < 1)
        throw ConfigError("config key 'record_stride' must be a positive integer");
      cfg.dynamics.record_stride = value.get<std::size_t>();
    } else {
      if (!numeric_field(cfg, key)) throw ConfigError("unknown config key '" + key + "'");
      if (!value.is_number()) throw ConfigError("config key '" + key + "' must be a number");
      set_numeric(cfg, key, value.get<double>());
    }
  }
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
  RunConfig cfg;
  apply_json(cfg, j);
  return cfg;
}

nlohmann::ordered_json to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  RunConfig copy = cfg;
  for (auto key : numeric_config_keys()) j[std::string(key)] = *numeric_field(copy, key);
  j["rule"] = std::string(to_string(cfg.dynamics.rule));
  j["record_stride"] = cfg.dynamics.record_stride;
  if (!cfg.out.empty()) j["out"] = cfg.out;
  return j;
}

std::vector<std::string> validate(const RunConfig& cfg) {
  auto v = validate_params(cfg.params, cfg.scheme).violations;
  for (auto& m : validate(cfg.dynamics)) v.push_back(std::move(m));
  const auto unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!unit(cfg.initial.y)) v.emplace_back("y0 must lie in [0,1]");
  if (!unit(cfg.initial.z_sbar)) v.emplace_back("z_sbar0 must lie in [0,1]");
  if (!unit(cfg.initial.z_ibar)) v.emplace_back("z_ibar0 must lie in [0,1]");
  return v;
}

}  // namespace bpsis
