#pragma once

// Flat run configuration. Every key is also a kebab-case CLI flag
// (beta_p <-> --beta-p). Precedence: built-in defaults, then the JSON file,
// then flags.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bpsis/dynamics.hpp"
#include "bpsis/model.hpp"

namespace bpsis {

struct RunConfig {
  ModelParams params;
  SignalScheme scheme;
  DynamicsConfig dynamics;
  PopulationState initial{0.01, 0.5, 0.5};
  std::string out;
};

/// Numeric keys accepted in the JSON object, in serialization order.
const std::vector<std::string_view>& numeric_config_keys();

/// Overwrites the fields named in `j`. Unknown keys and wrong types throw
/// ConfigError.
void apply_json(RunConfig& cfg, const nlohmann::json& j);

/// Sets one numeric key by name. Throws ConfigError for unknown keys.
void set_numeric(RunConfig& cfg, std::string_view key, double value);

RunConfig load_config(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const RunConfig& cfg);

/// Range violations of the parameters, scheme, dynamics and initial state.
std::vector<std::string> validate(const RunConfig& cfg);

}  // namespace bpsis
