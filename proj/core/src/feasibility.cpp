#include "semion/feasibility.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "semion/errors.hpp"

namespace semion {

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
  const double scale = std::pow(10.0, digits - 1 - exponent);
  return std::round(x * scale) / scale;
}

FeasibilityReport dwave_feasibility(const DeviceParams& d, const EffectiveCouplings& c) {
  for (double v : {d.J_dimensionless, d.J_physical_ghz, d.temperature_ghz, d.protocol_window_ns})
    if (!(v > 0.0) || !std::isfinite(v)) throw ParameterError("physical scales must be positive");
  if (d.control_resolution_ns && !(*d.control_resolution_ns > 0.0))
    throw ParameterError("control resolution must be positive");
  if (!(c.half_gamma > 0.0)) throw ParameterError("Gamma/2 must be positive");

  FeasibilityReport r;
  r.device = d;
  r.half_gamma_dimensionless = c.half_gamma;
  r.energy_scale_ghz = d.J_physical_ghz / d.J_dimensionless;
  r.K_physical_ghz = d.K_dimensionless * r.energy_scale_ghz;
  r.half_gamma_ghz = c.half_gamma * r.energy_scale_ghz;
  r.tau_ns = 1.0 / r.half_gamma_ghz;
  r.half_gamma_ghz_quoted = round_significant(r.half_gamma_ghz, 2);
  r.tau_ns_quoted = std::round(100.0 / r.half_gamma_ghz_quoted) / 100.0;
  r.thermal_deficit_quoted = (d.temperature_ghz - r.half_gamma_ghz_quoted) / d.temperature_ghz;

  r.thermal.margin = (r.half_gamma_ghz - d.temperature_ghz) / d.temperature_ghz;
  r.thermal.passed = r.half_gamma_ghz >= d.temperature_ghz;
  r.window.margin = (d.protocol_window_ns - r.tau_ns) / d.protocol_window_ns;
  r.window.passed = r.tau_ns <= d.protocol_window_ns;
  if (d.control_resolution_ns) {
    FeasibilityCheck res;
    res.margin = (r.tau_ns - *d.control_resolution_ns) / *d.control_resolution_ns;
    res.passed = r.tau_ns >= *d.control_resolution_ns;
    r.resolution = res;
  }
  r.feasible = r.thermal.passed && r.window.passed && (!r.resolution || r.resolution->passed);
  return r;
}

std::string FeasibilityReport::to_json() const {
  using nlohmann::json;
  auto check = [](const FeasibilityCheck& c) { return json{{"passed", c.passed}, {"margin", c.margin}}; };
  json j;
  j["device"] = {{"J_dimensionless", device.J_dimensionless},
                 {"K_dimensionless", device.K_dimensionless},
                 {"J_physical_ghz", device.J_physical_ghz},
                 {"temperature_ghz", device.temperature_ghz},
                 {"protocol_window_ns", device.protocol_window_ns},
                 {"control_resolution_ns",
                  device.control_resolution_ns ? json(*device.control_resolution_ns) : json(nullptr)}};
  j["half_gamma_dimensionless"] = half_gamma_dimensionless;
  j["energy_scale_ghz"] = energy_scale_ghz;
  j["K_physical_ghz"] = K_physical_ghz;
  j["half_gamma_ghz"] = half_gamma_ghz;
  j["tau_ns"] = tau_ns;
  j["half_gamma_ghz_quoted"] = half_gamma_ghz_quoted;
  j["tau_ns_quoted"] = tau_ns_quoted;
  j["thermal_deficit_quoted"] = thermal_deficit_quoted;
  j["checks"] = {{"thermal", check(thermal)}, {"window", check(window)}};
  if (resolution) j["checks"]["resolution"] = check(*resolution);
  j["verdict"] = feasible ? "feasible" : "infeasible";
  return j.dump(2);
}

}  // namespace semion
