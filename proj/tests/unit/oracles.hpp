#pragma once

// Independent reference implementations used as test oracles. None of these
// call into the library code they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using cd = std::complex<double>;

// Exact Lindblad propagation exp(L t) vec(rho) with the superoperator built
// densely; row-major vec index i*n + j.
inline Eigen::MatrixXcd lindblad_exact(const Eigen::MatrixXd& h, double gamma,
                                       const Eigen::MatrixXcd& rho0, double t) {
  const Eigen::Index n = h.rows();
  const Eigen::Index m = n * n;
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(m, m);
  const cd mi(0.0, -1.0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index row = i * n + j;
      for (Eigen::Index k = 0; k < n; ++k) {
        l(row, k * n + j) += mi * h(i, k);
        l(row, i * n + k) -= mi * h(k, j);
      }
      if (i != j) l(row, row) -= gamma;
    }
  Eigen::VectorXcd v(m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) v(i * n + j) = rho0(i, j);
  const Eigen::MatrixXcd prop = (l * t).exp();
  const Eigen::VectorXcd w = prop * v;
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = w(i * n + j);
  return out;
}

// Tridiagonal chain Hamiltonian written out element by element.
inline Eigen::MatrixXd chain_hamiltonian(const std::vector<double>& onsite,
                                         const std::vector<double>& bond) {
  const auto n = static_cast<Eigen::Index>(onsite.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) h(i, i) = onsite[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    h(i, i + 1) = bond[static_cast<std::size_t>(i)];
    h(i + 1, i) = bond[static_cast<std::size_t>(i)];
  }
  return h;
}

// Segment around `site` by walking outward until a cut bond or a chain end.
struct Span {
  std::size_t left, right;
};
inline Span scan_segment(const std::vector<bool>& cut, std::size_t site) {
  std::size_t left = site;
  while (left > 0 && !cut[left - 1]) --left;
  std::size_t right = site;
  while (right < cut.size() && !cut[right]) ++right;
  return {left, right};
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Two-sided one-sample Kolmogorov-Smirnov statistic.
template <class Cdf>
double ks_statistic(std::vector<double> xs, Cdf cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

// Asymptotic 1% critical value of the KS statistic.
inline double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

inline double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

inline double stddev(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

// Pauli algebra on n qubits, qubit k = bit k of the basis index, |0> = up.
inline Eigen::MatrixXd kron_op(const Eigen::Matrix2d& op, int qubit, int n) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Ones(1, 1);
  for (int k = n - 1; k >= 0; --k) {
    const Eigen::Matrix2d f = k == qubit ? op : Eigen::Matrix2d::Identity();
    Eigen::MatrixXd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index a = 0; a < out.rows(); ++a)
      for (Eigen::Index b = 0; b < out.cols(); ++b) next.block(2 * a, 2 * b, 2, 2) = out(a, b) * f;
    out = next;
  }
  return out;
}

inline Eigen::Matrix2d pauli_x() { return (Eigen::Matrix2d() << 0, 1, 1, 0).finished(); }
inline Eigen::Matrix2d pauli_z() { return (Eigen::Matrix2d() << 1, 0, 0, -1).finished(); }

}  // namespace oracle
