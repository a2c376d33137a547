#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "bpsis/dynamics.hpp"
#include "bpsis/equilibrium.hpp"
#include "bpsis/experiments.hpp"

namespace bpsis {

/// Shortest decimal that round-trips to the same double ("." separator,
/// locale independent). NaN formats as an empty field.
std::string format_double(double v);

inline constexpr const char* kSweepHeader =
    "c_p,mu_s,mu_i,kappa,lambda,case_id,y_star,z_sbar_star,z_ibar_star,fid_y_star,converged,"
    "t_converge,status";

/// Writes `# config: <json>` before the header when `metadata` is not null.
void write_trace_csv(std::ostream& os, const Trace& tr, const nlohmann::ordered_json& metadata = {});
void write_sweep_csv(std::ostream& os, const SweepTable& table,
                     const nlohmann::ordered_json& metadata = {});

nlohmann::ordered_json to_json(const SneResult& r);
nlohmann::ordered_json to_json(const Verdict& v);
nlohmann::ordered_json to_json(const Thresholds& t);

}  // namespace bpsis
