#include "bpsis/io.hpp"

#include <charconv>
#include <cmath>

namespace bpsis {

std::string format_double(double v) {
  if (std::isnan(v)) return {};
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

void metadata_line(std::ostream& os, const nlohmann::ordered_json& metadata) {
  if (!metadata.is_null()) os << "# config: " << metadata.dump() << '\n';
}

}  // namespace

void write_trace_csv(std::ostream& os, const Trace& tr, const nlohmann::ordered_json& metadata) {
  metadata_line(os, metadata);
  os << "t,y,z_sbar,z_ibar\n";
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const auto& x = tr.states[k];
    os << format_double(tr.times[k]) << ',' << format_double(x.y) << ',' << format_double(x.z_sbar)
       << ',' << format_double(x.z_ibar) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const SweepTable& table,
                     const nlohmann::ordered_json& metadata) {
  metadata_line(os, metadata);
  os << kSweepHeader;
  if (!table.extra_column.empty()) os << ',' << table.extra_column;
  os << '\n';
  for (const auto& r : table.rows) {
    os << format_double(r.c_p) << ',' << format_double(r.mu_s) << ',' << format_double(r.mu_i)
       << ',' << format_double(r.kappa) << ',' << opt(r.lambda) << ',' << csv_field(r.case_id)
       << ',' << format_double(r.y_star) << ',' << format_double(r.z_sbar_star) << ','
       << format_double(r.z_ibar_star) << ',' << opt(r.fid_y_star) << ','
       << (r.converged ? (*r.converged ? "1" : "0") : "") << ',' << opt(r.t_converge) << ','
       << csv_field(r.status);
    if (!table.extra_column.empty()) os << ',' << opt(r.extra);
    os << '\n';
  }
}

nlohmann::ordered_json to_json(const SneResult& r) {
  nlohmann::ordered_json j;
  j["case_id"] = std::string(to_string(r.case_id));
  j["y"] = r.state.y;
  j["z_sbar"] = r.state.z_sbar;
  j["z_ibar"] = r.state.z_ibar;
  j["boundary"] = r.boundary;
  nlohmann::ordered_json certs = nlohmann::ordered_json::object();
  for (const auto& c : r.certificates) certs[c.name] = c.value;
  j["certificates"] = certs;
  return j;
}

nlohmann::ordered_json to_json(const Verdict& v) {
  const auto cond = [](const ConditionCheck& c) {
    return nlohmann::ordered_json{{"ok", c.ok}, {"residual", c.residual}};
  };
  nlohmann::ordered_json j;
  j["pass"] = v.pass;
  j["endemic"] = cond(v.endemic);
  j["sbar"] = cond(v.sbar);
  j["ibar"] = cond(v.ibar);
  j["y_ee"] = v.y_ee;
  j["du_sbar"] = v.du_sbar;
  j["du_ibar"] = v.du_ibar;
  return j;
}

nlohmann::ordered_json to_json(const Thresholds& t) {
  nlohmann::ordered_json j;
  j["y_star_u"] = t.y_star_u;
  j["y_star_int"] = t.y_star_int;
  j["y_star_p"] = t.y_star_p;
  j["mu_s_min"] = t.mu_s_min;
  j["mu_s_min_defined"] = t.mu_s_min_defined;
  j["mu_s_min_applicable"] = t.mu_s_min_applicable;
  j["mu_s_max"] = t.mu_s_max;
  j["boundary"] = t.boundary;
  return j;
}

}  // namespace bpsis
