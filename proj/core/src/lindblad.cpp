#include "semion/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "semion/errors.hpp"

namespace semion {

namespace odeint = boost::numeric::odeint;

HoppingMatrix::HoppingMatrix(std::vector<double> onsite, std::vector<double> bond)
    : onsite_(std::move(onsite)), bond_(std::move(bond)) {
  if (onsite_.empty() || bond_.size() + 1 != onsite_.size())
    throw ParameterError("hopping matrix needs L onsite and L-1 bond entries");
}

double HoppingMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw ParameterError("hopping matrix index out of range");
  if (i == j) return onsite_[i];
  if (i + 1 == j) return bond_[i];
  if (j + 1 == i) return bond_[j];
  return 0.0;
}

HoppingMatrix HoppingMatrix::block(std::size_t first, std::size_t count) const {
  if (count == 0 || first + count > size()) throw ParameterError("hopping block out of range");
  std::vector<double> onsite(onsite_.begin() + first, onsite_.begin() + first + count);
  std::vector<double> bond(bond_.begin() + first, bond_.begin() + first + count - 1);
  return HoppingMatrix(std::move(onsite), std::move(bond));
}

Eigen::MatrixXd HoppingMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = onsite_[i];
  for (Eigen::Index i = 0; i + 1 < n; ++i) h(i, i + 1) = h(i + 1, i) = bond_[i];
  return h;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0)
    throw ParameterError("density matrix must be square and non-empty");
}

DensityMatrix DensityMatrix::localized(std::size_t sites, std::size_t site) {
  if (site >= sites) throw ParameterError("localized state outside the chain");
  const auto n = static_cast<Eigen::Index>(sites);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, n);
  rho(static_cast<Eigen::Index>(site), static_cast<Eigen::Index>(site)) = 1.0;
  return DensityMatrix(std::move(rho));
}

double DensityMatrix::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const Eigen::MatrixXcd h = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

HoppingMatrix build_hamiltonian(const ChainSpec& spec, const VisonConfig& visons,
                                const DisorderRealization* disorder) {
  spec.validate();
  const std::size_t n = spec.length;
  if (visons.sites() != n)
    throw ParameterError("vison config has " + std::to_string(visons.bond_count()) +
                         " bonds, chain needs " + std::to_string(n - 1));
  if (disorder && (disorder->onsite.size() != n || disorder->bond.size() != n - 1))
    throw ParameterError("disorder realization does not match chain length");

  std::vector<double> onsite(n, 0.0);
  std::vector<double> bond(n - 1, 0.0);
  for (std::size_t s = 0; s + 1 < n; ++s) {
    bond[s] = visons.has_vison(s) ? 0.0 : -spec.hopping;
    if (disorder) bond[s] += disorder->bond[s];
  }
  if (disorder) onsite = disorder->onsite;
  return HoppingMatrix(std::move(onsite), std::move(bond));
}

namespace {

using State = std::vector<double>;  // rho row-major, (re, im) interleaved

// d rho/dt for a tridiagonal H with site-basis dephasing. Only the upper
// triangle is computed and the lower one is its conjugate, so Hermitian input
// gives an exactly Hermitian derivative and real-coefficient Runge-Kutta
// combinations keep rho Hermitian to the last bit. Row neighbours outside the
// chain read from a zero row; column ends are peeled.
struct LindbladRhs {
  const double* onsite;
  const double* bond;
  std::size_t n;
  double gamma;
  std::vector<std::complex<double>> zero_row;

  LindbladRhs(const double* d, const double* b, std::size_t size, double g)
      : onsite(d), bond(b), n(size), gamma(g), zero_row(size) {}

  void operator()(const State& x, State& dxdt, double /*t*/) const {
    using cd = std::complex<double>;
    const cd* rho = reinterpret_cast<const cd*>(x.data());
    cd* out = reinterpret_cast<cd*>(dxdt.data());
    for (std::size_t i = 0; i < n; ++i) {
      const cd* row = rho + i * n;
      const cd* up = i > 0 ? rho + (i - 1) * n : zero_row.data();
      const cd* down = i + 1 < n ? rho + (i + 1) * n : zero_row.data();
      const double b_up = i > 0 ? bond[i - 1] : 0.0;
      const double b_down = i + 1 < n ? bond[i] : 0.0;
      const double di = onsite[i];
      cd* o = out + i * n;
      for (std::size_t j = i; j < n; ++j) {
        // (H rho - rho H)_ij
        cd comm = (di - onsite[j]) * row[j] + b_up * up[j] + b_down * down[j];
        if (j > 0) comm -= bond[j - 1] * row[j - 1];
        if (j + 1 < n) comm -= bond[j] * row[j + 1];
        // -i comm - gamma rho_ij off the diagonal
        if (j == i) {
          o[j] = cd(comm.imag(), 0.0);
        } else {
          o[j] = cd(comm.imag(), -comm.real()) - gamma * row[j];
          out[j * n + i] = std::conj(o[j]);
        }
      }
    }
  }
};

DensityMatrix unpack(const State& x, std::size_t n) {
  Eigen::MatrixXcd rho(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          {x[2 * (i * n + j)], x[2 * (i * n + j) + 1]};
  return DensityMatrix(std::move(rho));
}

}  // namespace

std::vector<DensityMatrix> evolve(const HoppingMatrix& hamiltonian, double gamma,
                                  const DensityMatrix& rho0, std::span<const double> times,
                                  const IntegratorOptions& options) {
  const std::size_t n = hamiltonian.size();
  if (rho0.size() != n) throw ParameterError("density matrix and Hamiltonian sizes differ");
  if (!(gamma >= 0.0)) throw ParameterError("dephasing rate must be >= 0");
  if (times.empty()) return {};
  if (times.front() < 0.0) throw ParameterError("snapshot times must be >= 0");
  if (!std::is_sorted(times.begin(), times.end()))
    throw ParameterError("snapshot times must be ascending");

  State x(2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = rho0(i, j);
      x[2 * (i * n + j)] = v.real();
      x[2 * (i * n + j) + 1] = v.imag();
    }

  // Integration always starts at t = 0; a leading zero is prepended when the
  // first requested time is later and its observation is dropped.
  std::vector<double> grid;
  grid.reserve(times.size() + 1);
  const bool prepend = times.front() > 0.0;
  if (prepend) grid.push_back(0.0);
  grid.insert(grid.end(), times.begin(), times.end());

  std::vector<DensityMatrix> snapshots;
  snapshots.reserve(times.size());
  std::size_t seen = 0;
  auto observer = [&](const State& state, double /*t*/) {
    if (!(prepend && seen == 0)) snapshots.push_back(unpack(state, n));
    ++seen;
  };

  double dt0 = options.initial_step;
  if (!(dt0 > 0.0)) {
    dt0 = 0.05;
    for (std::size_t k = 1; k < grid.size(); ++k)
      if (grid[k] > grid[k - 1]) {
        dt0 = std::min(dt0, grid[k] - grid[k - 1]);
        break;
      }
  }
  LindbladRhs rhs(hamiltonian.onsite().data(), hamiltonian.bond().data(), n, gamma);
  auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol,
                                         odeint::runge_kutta_dopri5<State>());
  try {
    odeint::integrate_times(stepper, std::cref(rhs), x, grid.begin(), grid.end(),
                            dt0, observer,
                            odeint::max_step_checker(options.max_steps_between_snapshots));
  } catch (const std::exception& e) {
    std::ostringstream msg;
    msg << "Lindblad integration failed (n=" << n << ", gamma=" << gamma
        << ", t_final=" << grid.back() << ", rtol=" << options.rel_tol
        << ", atol=" << options.abs_tol << "): " << e.what();
    throw NumericalError(msg.str());
  }
  for (const auto& s : snapshots) {
    const double tr = std::abs(s.trace() - 1.0);
    if (!std::isfinite(tr))
      throw NumericalError("Lindblad integration produced a non-finite density matrix");
  }
  return snapshots;
}

std::vector<double> density_profile(const DensityMatrix& rho) {
  std::vector<double> p(rho.size());
  for (std::size_t s = 0; s < p.size(); ++s) p[s] = rho(s, s).real();
  return p;
}

double mean_square_displacement(std::span<const double> profile, std::size_t origin) {
  double msd = 0.0;
  for (std::size_t s = 0; s < profile.size(); ++s) {
    const double x = static_cast<double>(s) - static_cast<double>(origin);
    msd += x * x * profile[s];
  }
  return msd;
}

double mean_square_displacement(const DensityMatrix& rho, std::size_t origin) {
  const auto p = density_profile(rho);
  return mean_square_displacement(p, origin);
}

}  // namespace semion
