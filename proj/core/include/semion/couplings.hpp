#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semion/eigensolver.hpp"
#include "semion/star_hamiltonian.hpp"

namespace semion {

struct StarLevel {
  double energy = 0.0;
  int degeneracy = 0;
  int parity = 0;
};

/// Closed-form lowest single-star levels at Gamma_g = 0:
/// E0 = -4 sqrt((2J)^2 + G^2) (x8, P=+1), E1 = -sqrt((4J)^2 + G^2) - 3|G| (x8, P=-1),
/// E2 = -sqrt((4J)^2 + G^2) - |G| with the (x32, P=+1) labels as reported.
/// E0 and E1 match exact diagonalization; E2 is an exact eigenvalue but its
/// multiplicity there is 24 with P=-1 for G != 0.
std::array<StarLevel, 3> single_star_levels(double J, double gamma0);

/// Effective ladder couplings read from two-star spectra.
struct EffectiveCouplings {
  double lambda = 0.0;      // spinon gap scale, delta_s / 2
  double half_gamma = 0.0;  // spinon hopping scale Gamma/2, delta_h / 4
  double delta_s = 0.0;
  double delta_h = 0.0;
};

/// Two free spins (top, bottom) between two pinned stars:
/// H = -lambda (A_L + A_R) - (Gamma/2)(sigma^x_t + sigma^x_b), with
/// A_L = pL sigma^z_t sigma^z_b, A_R = pR sigma^z_t sigma^z_b and pL pR the
/// boundary parity. Returns all four levels.
Spectrum z2_two_star_spectrum(double lambda, double gamma, int boundary_parity);

/// delta_h = width of the odd sector's lowest four levels, delta_s = their
/// middle pair minus the even ground. Throws StructureError unless those four
/// levels group as 1-2-1 or are 4-fold degenerate.
EffectiveCouplings extract_couplings(const Spectrum& even, const Spectrum& odd);

struct TwoStarResult {
  Spectrum even;
  Spectrum odd;
  EffectiveCouplings couplings;
};

/// ED of both pinning sectors of a two-star assembly at Gamma_m = Gamma_g = gamma0
/// (unless gamma_g is given), lowest `levels` eigenvalues labeled by G_p.
TwoStarResult two_star_couplings(double J, double gamma0, std::optional<double> K = std::nullopt,
                                 std::size_t levels = 8, std::optional<double> gamma_g = std::nullopt,
                                 const EigenOptions& eigen = {});

struct CouplingRow {
  double gamma0 = 0.0;
  std::optional<EffectiveCouplings> couplings;
  std::string error;  // set when extraction failed for this grid point
};

struct CouplingMap {
  std::vector<CouplingRow> rows;
  std::optional<double> crossing;  // first gamma0 where lambda = Gamma/2, linear interpolation
};

/// Couplings over an ascending gamma0 grid; grid points run in parallel.
CouplingMap coupling_map(double J, std::span<const double> gamma0_grid,
                         std::optional<double> K = std::nullopt, std::size_t workers = 0);

/// Linear-interpolated first zero of a - b between consecutive samples.
std::optional<double> first_crossing(std::span<const double> x, std::span<const double> a,
                                     std::span<const double> b);

}  // namespace semion
