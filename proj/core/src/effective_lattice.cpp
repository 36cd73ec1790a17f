#include "semion/effective_lattice.hpp"

#include <cmath>
#include <numbers>

#include "semion/errors.hpp"

namespace semion {

namespace {

// Outer vertex i of a star is joined to the inner vertices listed here.
constexpr int kAdjacency[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

void add_edge(Eigen::MatrixXd& h, int a, int b, double amp) {
  h(a, b) += amp;
  h(b, a) += amp;
}

Eigen::MatrixXd star_block(double gamma_m) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(8, 8);
  for (int o = 0; o < 4; ++o)
    for (int j : kAdjacency[o]) add_edge(h, o, 4 + j, -gamma_m);
  return h;
}

}  // namespace

Flux flux_from_angle(double phi) {
  if (std::abs(phi) < 1e-12) return Flux::Zero;
  if (std::abs(phi - std::numbers::pi) < 1e-12) return Flux::Pi;
  throw ParameterError("flux angle must be 0 or pi");
}

Eigen::MatrixXd effective_lattice_matrix(double gamma_m, double gamma_g, Flux flux) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(16, 16);
  const Eigen::MatrixXd star = star_block(gamma_m);
  h.topLeftCorner(8, 8) = star;
  h.bottomRightCorner(8, 8) = star;
  add_edge(h, 3, 8 + 2, -gamma_g);
  add_edge(h, 1, 8 + 0, flux == Flux::Pi ? gamma_g : -gamma_g);
  return h;
}

Spectrum effective_lattice_spectrum(double gamma_m, double gamma_g, Flux flux, double J) {
  Spectrum s = lowest_spectrum(effective_lattice_matrix(gamma_m, gamma_g, flux), 16);
  for (auto& v : s.values) v += 4.0 * J;
  return s;
}

EffectiveCouplings perturbative_couplings(double J, double gamma0) {
  const Spectrum zero = lowest_spectrum(effective_lattice_matrix(gamma0, gamma0, Flux::Zero), 2);
  const Spectrum pi = lowest_spectrum(effective_lattice_matrix(gamma0, gamma0, Flux::Pi), 1);
  EffectiveCouplings c;
  c.delta_s = 4.0 * J + pi.values[0];
  c.delta_h = zero.values[1] - zero.values[0];
  c.lambda = c.delta_s / 2.0;
  c.half_gamma = c.delta_h / 4.0;
  return c;
}

std::complex<double> projected_hop_amplitude(double gamma_g, double overlap, Flux flux) {
  if (!(overlap >= 0.0 && overlap <= 1.0)) throw ParameterError("|M| must lie in [0, 1]");
  if (flux == Flux::Pi) return {0.0, 0.0};
  return {-2.0 * gamma_g * overlap * overlap, 0.0};
}

double star_ground_overlap() {
  const Spectrum s = lowest_spectrum(star_block(1.0), 1);
  return std::abs(s.vectors(3, 0));
}

double other_star_weight(double gamma_m, double gamma_g) {
  const Spectrum s = lowest_spectrum(effective_lattice_matrix(gamma_m, gamma_g, Flux::Pi), 2);
  if (!nearly_equal(s.values[0], s.values[1], 1e-9))
    throw StructureError("flux-pi ground level is not doubly degenerate");
  Eigen::MatrixXd on_left = s.vectors.topRows(8).transpose() * s.vectors.topRows(8);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(on_left, Eigen::EigenvaluesOnly);
  return 1.0 - solver.eigenvalues().maxCoeff();
}

}  // namespace semion
