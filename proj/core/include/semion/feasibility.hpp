#pragma once

#include <optional>
#include <string>

#include "semion/couplings.hpp"

namespace semion {

/// Annealer operating point. Energies are in GHz (E/h), times in ns.
struct DeviceParams {
  double J_dimensionless = 1.0;
  double K_dimensionless = 3.0;
  double J_physical_ghz = 0.46;  // J at the operating point of the schedule
  double temperature_ghz = 0.27;
  double protocol_window_ns = 1.0e6;                 // observation must fit in this window
  std::optional<double> control_resolution_ns = 1.0e3;  // shortest resolvable timescale
};

struct FeasibilityCheck {
  bool passed = false;
  double margin = 0.0;  // relative; negative when the check fails
};

struct FeasibilityReport {
  DeviceParams device;
  double half_gamma_dimensionless = 0.0;
  double energy_scale_ghz = 0.0;  // GHz per dimensionless energy unit
  double K_physical_ghz = 0.0;
  double half_gamma_ghz = 0.0;
  double tau_ns = 0.0;            // 1 / (Gamma/2)
  double half_gamma_ghz_quoted = 0.0;  // two significant figures
  double tau_ns_quoted = 0.0;          // from the quoted Gamma/2, two decimals
  double thermal_deficit_quoted = 0.0; // (T - Gamma/2) / T with the quoted value
  FeasibilityCheck thermal;     // Gamma/2 >= T
  FeasibilityCheck window;      // tau <= protocol window
  std::optional<FeasibilityCheck> resolution;  // tau >= control resolution
  bool feasible = false;

  std::string to_json() const;
};

/// Converts Gamma/2 to physical units through J_physical / J_dimensionless and
/// compares the hopping scale with temperature and the protocol timescales.
FeasibilityReport dwave_feasibility(const DeviceParams& device, const EffectiveCouplings& couplings);

/// Rounds to `digits` significant figures.
double round_significant(double x, int digits);

}  // namespace semion
