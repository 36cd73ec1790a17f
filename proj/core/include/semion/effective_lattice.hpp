#pragma once

#include <complex>

#include <Eigen/Dense>

#include "semion/couplings.hpp"
#include "semion/eigensolver.hpp"

namespace semion {

/// Flux through the plaquette between the two stars.
enum class Flux { Zero, Pi };

/// Maps an angle to Flux; throws ParameterError unless it is 0 or pi (1e-12).
Flux flux_from_angle(double phi);

/// 16-vertex single-spinon graph: per star (offset 0 and 8) outer vertices
/// 0-3 and inner vertices 4-7, outer i joined to three inner vertices with
/// amplitude -gamma_m; inter-star edges 3-10 and 1-8 with amplitude -gamma_g,
/// the second carrying the flux sign.
Eigen::MatrixXd effective_lattice_matrix(double gamma_m, double gamma_g, Flux flux);

/// Spinon excitation energies 4J + eigenvalues of the graph, ascending.
Spectrum effective_lattice_spectrum(double gamma_m, double gamma_g, Flux flux, double J);

/// lambda = 2J + e_pi/2 from the flux-pi ground level; Gamma/2 = (e1 - e0)/4
/// from the two lowest flux-zero levels; gamma_m = gamma_g = gamma0.
EffectiveCouplings perturbative_couplings(double J, double gamma0);

/// First-order hop between the two star ground states,
/// -gamma_g |M|^2 (1 + e^{i phi}); exactly zero for Flux::Pi.
std::complex<double> projected_hop_amplitude(double gamma_g, double overlap, Flux flux);

/// |M|: ground-state amplitude of one star's 8-vertex graph on an outer vertex.
double star_ground_overlap();

/// Weight on the other star of the most localized combination of the
/// doubly degenerate flux-pi ground pair.
double other_star_weight(double gamma_m, double gamma_g);

}  // namespace semion
