#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "semion/disorder.hpp"
#include "semion/lattice.hpp"

namespace semion {

/// Real symmetric tridiagonal single-particle Hamiltonian.
/// bond[s] is the (s, s+1) element, onsite[s] the diagonal.
class HoppingMatrix {
 public:
  HoppingMatrix() = default;
  HoppingMatrix(std::vector<double> onsite, std::vector<double> bond);

  std::size_t size() const noexcept { return onsite_.size(); }
  double operator()(std::size_t i, std::size_t j) const;
  const std::vector<double>& onsite() const noexcept { return onsite_; }
  const std::vector<double>& bond() const noexcept { return bond_; }

  /// Sub-block for sites [first, first + count).
  HoppingMatrix block(std::size_t first, std::size_t count) const;
  Eigen::MatrixXd dense() const;

 private:
  std::vector<double> onsite_;
  std::vector<double> bond_;
};

/// Spinon density matrix in the site basis.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(Eigen::MatrixXcd rho);

  /// |site><site| on a chain of `sites` sites.
  static DensityMatrix localized(std::size_t sites, std::size_t site);

  std::size_t size() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return rho_; }
  Eigen::MatrixXcd& matrix() noexcept { return rho_; }
  std::complex<double> operator()(std::size_t i, std::size_t j) const { return rho_(i, j); }

  std::complex<double> trace() const { return rho_.trace(); }
  double hermiticity_error() const;
  double min_eigenvalue() const;

 private:
  Eigen::MatrixXcd rho_;
};

/// H_ss+1 = -Gamma (1 - v_s) + w(o)_s, H_ss = w(d)_s.
HoppingMatrix build_hamiltonian(const ChainSpec& spec, const VisonConfig& visons,
                                const DisorderRealization* disorder = nullptr);

struct IntegratorOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  double initial_step = 0.0;  // 0: min(first interval, 0.05)
  int max_steps_between_snapshots = 10'000'000;
};

/// Integrates d rho/dt = -i[H, rho] - gamma (1 - delta_ss') rho_ss' from t = 0
/// and returns one snapshot per requested time. Times must be ascending and
/// non-negative. Throws NumericalError if the adaptive integrator cannot meet
/// its tolerance.
std::vector<DensityMatrix> evolve(const HoppingMatrix& hamiltonian, double gamma,
                                  const DensityMatrix& rho0, std::span<const double> times,
                                  const IntegratorOptions& options = {});

/// Diagonal of rho.
std::vector<double> density_profile(const DensityMatrix& rho);

/// Sum_s (s - origin)^2 rho_ss.
double mean_square_displacement(const DensityMatrix& rho, std::size_t origin);
double mean_square_displacement(std::span<const double> profile, std::size_t origin);

}  // namespace semion
