#include "aluffi/report_json.hpp"

namespace aluffi {

nlohmann::json to_json(const Polynomial& f) { return format_poly(f); }

nlohmann::json to_json(const std::vector<Polynomial>& gens) {
  auto out = nlohmann::json::array();
  for (const auto& g : gens) out.push_back(format_poly(g));
  return out;
}

nlohmann::json to_json(const TorsionReport& report) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& d : report.degrees) {
    nlohmann::json entry{{"t", d.t}, {"vv_zero", d.vv_zero}};
    if (d.witness) entry["witness"] = format_poly(*d.witness);
    degrees.push_back(std::move(entry));
  }
  nlohmann::json out{
      {"schema_version", kJsonSchemaVersion},
      {"pair", {{"J", to_json(report.j.generators())}, {"I", to_json(report.i.generators())}}},
      {"r", report.r ? nlohmann::json(*report.r) : nlohmann::json(nullptr)},
      {"fast_path", report.fast_path},
      {"t_max", report.t_max},
      {"degrees", std::move(degrees)},
      {"verdict", report.verdict_label()},
  };
  return out;
}

nlohmann::json to_json(const CriticalData& data) {
  return {
      {"schema_version", kJsonSchemaVersion},
      {"r", data.r},
      {"nonzero_minors", data.minors.size()},
      {"critical_ideal", to_json(data.critical_ideal.generators())},
      {"mu_critical", data.mu_critical},
      {"equals_power", data.equals_power},
  };
}

nlohmann::json to_json(const GroebnerBasis& gb) {
  return {
      {"schema_version", kJsonSchemaVersion},
      {"order", gb.order.name()},
      {"reduced", gb.reduced},
      {"elements", to_json(gb.elements)},
  };
}

nlohmann::json to_json(const IgpGenerators& igp) {
  nlohmann::json alpha = nlohmann::json::array();
  for (const auto& [ij, values] : igp.alpha) {
    nlohmann::json row{{"i", ij.first}, {"j", ij.second}};
    nlohmann::json coeffs = nlohmann::json::object();
    for (std::size_t k = 0; k < values.size(); ++k) coeffs[std::to_string(igp.t_first + k)] = values[k].get_str();
    row["alpha"] = std::move(coeffs);
    alpha.push_back(std::move(row));
  }
  return {
      {"n", igp.n},
      {"s", igp.s},
      {"t_range", {igp.t_first, igp.n - 1}},
      {"generators", to_json(igp.generators)},
      {"alpha", std::move(alpha)},
  };
}

}  // namespace aluffi
