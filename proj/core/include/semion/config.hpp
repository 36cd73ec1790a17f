#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semion {

enum class ExperimentKind {
  BaseDynamics,
  DisorderSweep,
  ClassicalRw,
  Strobo,
  Spectra,
  CouplingMap,
  Analytic,
  DwaveFeasibility,
};

std::string_view kind_name(ExperimentKind kind);
ExperimentKind parse_kind(std::string_view name);  // throws ConfigError
std::string_view kind_description(ExperimentKind kind);
const std::vector<ExperimentKind>& all_kinds();

/// Experiment description. Energies are in units of the chain hopping (chain
/// experiments) or of J (star experiments); times in units of 1/hopping, or
/// Monte Carlo steps for the classical walker.
struct ExperimentConfig {
  int schema_version = 1;
  ExperimentKind kind = ExperimentKind::BaseDynamics;
  std::uint64_t seed = 1;
  std::size_t realizations = 10240;
  std::string output;  // file stem; empty means the experiment name

  struct Chain {
    std::size_t length = 25;
    double hopping = 1.0;
    double dephasing = 0.5;
    std::optional<std::size_t> origin;  // default: centre site
  } chain;
  struct Visons {
    double rho_v = 0.5;
  } visons;
  std::vector<double> times{1.0, 100.0};
  struct Disorder {
    double sigma0 = 0.0;
    double sigma1 = 0.0;
    std::vector<double> sigma0_grid{0.0, 0.5, 1.0, 2.0, 5.0};
    std::vector<double> sigma1_grid{0.0, 0.25, 0.5, 0.75, 1.0};
  } disorder;
  struct Strobo {
    double delta_t = 1.0;
  } strobo;
  struct Classical {
    double sigma = 0.0;
    double temperature = 1.0;
  } classical;
  struct Stars {
    double J = 1.0;
    double gamma0 = 0.6;
    std::optional<double> gamma_g;  // default: gamma0
    std::optional<double> K;
    std::vector<double> gamma0_grid;  // empty: 0.05 .. 2.5 in steps of 0.05
    std::size_t levels = 8;
    int n_stars = 2;
  } stars;
  struct Analytic {
    std::size_t cutoff = 12;
    std::size_t density_range = 12;  // |x| range of the density table
  } analytic;
  struct Dwave {
    double J_dimensionless = 1.0;
    double K_dimensionless = 3.0;
    double J_physical_ghz = 0.46;
    double temperature_ghz = 0.27;
    double protocol_window_ns = 1.0e6;
    std::optional<double> control_resolution_ns = 1.0e3;
    double gamma0 = 1.45;
    std::optional<double> half_gamma;  // default: from the K-coupled two-star ED
  } dwave;
  // Exceeding a limit is a capacity error rather than a validation error.
  struct Limits {
    std::size_t max_chain_length = 1024;         // dense L x L density matrix
    std::size_t max_hilbert_dimension = 1u << 20;  // star assemblies
  } limits;

  /// Defaults for `kind`, including its default realization count and times.
  static ExperimentConfig defaults(ExperimentKind kind);

  /// Throws ConfigError naming the first offending field.
  void validate() const;

  std::string to_json(int indent = 2) const;
  /// Unknown keys are rejected; missing keys take the defaults of the kind.
  static ExperimentConfig from_json(const std::string& text);
  static ExperimentConfig load(const std::string& path);

  std::size_t origin() const { return chain.origin.value_or((chain.length - 1) / 2); }
  std::vector<double> gamma0_grid() const;
};

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

}  // namespace semion
