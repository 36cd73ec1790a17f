#include "semion/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "semion/errors.hpp"

namespace semion {

bool nearly_equal(double a, double b, double rel_tol) {
  return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<std::pair<std::size_t, std::size_t>> Spectrum::groups(double rel_tol) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i + 1;
    while (j < values.size() && nearly_equal(values[j], values[j - 1], rel_tol)) ++j;
    out.emplace_back(i, j - i);
    i = j;
  }
  return out;
}

namespace {

void check_k(std::size_t k, std::size_t dim) {
  if (k == 0 || k > dim)
    throw ParameterError("requested " + std::to_string(k) + " eigenvalues of a " +
                         std::to_string(dim) + "-dimensional matrix");
}

void fill_residuals(Spectrum& s, const SparseMatrix& h) {
  s.residuals.resize(s.values.size());
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const Eigen::VectorXd v = s.vectors.col(static_cast<Eigen::Index>(i));
    s.residuals[i] = (h * v - s.values[i] * v).norm();
  }
}

Spectrum from_dense(const Eigen::MatrixXd& dense, std::size_t k, bool keep_vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      dense, keep_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("dense eigensolver failed");
  Spectrum s;
  s.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  if (keep_vectors) s.vectors = solver.eigenvectors().leftCols(static_cast<Eigen::Index>(k));
  return s;
}

bool is_diagonal(const SparseMatrix& h) {
  for (Eigen::Index r = 0; r < h.outerSize(); ++r)
    for (SparseMatrix::InnerIterator it(h, r); it; ++it)
      if (it.col() != r && it.value() != 0.0) return false;
  return true;
}

Spectrum from_diagonal(const SparseMatrix& h, std::size_t k, bool keep_vectors) {
  const Eigen::VectorXd d = h.diagonal();
  std::vector<std::size_t> order(static_cast<std::size_t>(d.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  Spectrum s;
  for (std::size_t i = 0; i < k; ++i) s.values.push_back(d[order[i]]);
  if (keep_vectors) {
    s.vectors = Eigen::MatrixXd::Zero(d.size(), static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < k; ++i) s.vectors(order[i], i) = 1.0;
    s.residuals.assign(k, 0.0);
  }
  return s;
}

// Orthonormalizes the columns of `block` against `basis` and each other
// (two passes of classical Gram-Schmidt) and drops columns that vanish.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& basis, Eigen::MatrixXd block) {
  std::vector<Eigen::VectorXd> kept;
  for (Eigen::Index c = 0; c < block.cols(); ++c) {
    Eigen::VectorXd v = block.col(c);
    const double norm0 = v.norm();
    if (norm0 == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      if (basis.cols() > 0) v -= basis * (basis.transpose() * v);
      for (const auto& q : kept) v -= q * q.dot(v);
    }
    const double norm = v.norm();
    if (norm > 1e-10 * norm0) kept.push_back(v / norm);
  }
  Eigen::MatrixXd out(block.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = kept[i];
  return out;
}

// Thick-restart block Lanczos with full reorthogonalization: each cycle
// extends the kept Ritz vectors by a block Krylov space, does Rayleigh-Ritz
// and keeps the lowest third of the basis. Keeping Ritz vectors beyond k
// deflates clusters that straddle level k.
Spectrum block_lanczos(const SparseMatrix& h, std::size_t k, const EigenOptions& opt) {
  const auto dim = static_cast<std::size_t>(h.rows());
  const std::size_t b = std::min(dim, opt.block_size ? opt.block_size : k + 4);
  const std::size_t max_basis = std::min(dim, std::max<std::size_t>(12 * b, 160));
  const std::size_t thick = std::max(b, max_basis / 3);

  std::mt19937_64 rng(0x5eed5eedULL);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd x(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(b));
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) x(i, j) = normal(rng);
  x = orthonormalize(Eigen::MatrixXd(static_cast<Eigen::Index>(dim), 0), x);

  double worst = 0.0;
  for (std::size_t cycle = 1; cycle <= opt.max_restarts; ++cycle) {
    Eigen::MatrixXd v = x;
    Eigen::MatrixXd hv = h * v;
    // Residuals of all kept Ritz vectors share one block, so expanding from
    // the top b of them spans it.
    Eigen::Index last = std::max<Eigen::Index>(0, v.cols() - static_cast<Eigen::Index>(b));
    while (static_cast<std::size_t>(v.cols()) < max_basis) {
      Eigen::MatrixXd next = orthonormalize(v, hv.rightCols(v.cols() - last));
      if (next.cols() == 0) break;  // invariant subspace reached
      const auto room = static_cast<Eigen::Index>(max_basis) - v.cols();
      if (next.cols() > room) next.conservativeResize(Eigen::NoChange, room);
      last = v.cols();
      const Eigen::MatrixXd hnext = h * next;
      v.conservativeResize(Eigen::NoChange, v.cols() + next.cols());
      v.rightCols(next.cols()) = next;
      hv.conservativeResize(Eigen::NoChange, hv.cols() + hnext.cols());
      hv.rightCols(hnext.cols()) = hnext;
    }
    Eigen::MatrixXd t = v.transpose() * hv;
    t = 0.5 * (t + t.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(t);
    const auto keep = std::min<Eigen::Index>(static_cast<Eigen::Index>(thick), t.rows());
    const Eigen::MatrixXd y = ritz.eigenvectors().leftCols(keep);
    x = v * y;
    const Eigen::MatrixXd hx = hv * y;
    worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto c = static_cast<Eigen::Index>(i);
      worst = std::max(worst, (hx.col(c) - ritz.eigenvalues()[c] * x.col(c)).norm());
    }
    if (worst < opt.residual_tol) {
      Spectrum s;
      s.iterations = cycle;
      s.values.assign(ritz.eigenvalues().data(), ritz.eigenvalues().data() + k);
      s.vectors = x.leftCols(static_cast<Eigen::Index>(k));
      return s;
    }
    x = orthonormalize(Eigen::MatrixXd(static_cast<Eigen::Index>(dim), 0), x);
  }
  std::ostringstream msg;
  msg << "block Lanczos did not converge: dimension " << dim << ", k " << k << ", block " << b
      << ", basis " << max_basis << ", restarts " << opt.max_restarts << ", worst residual "
      << worst << " > " << opt.residual_tol;
  throw NumericalError(msg.str());
}

}  // namespace

Spectrum lowest_spectrum(const SparseMatrix& h, std::size_t k, const EigenOptions& options) {
  if (h.rows() != h.cols()) throw ParameterError("matrix must be square");
  const auto dim = static_cast<std::size_t>(h.rows());
  check_k(k, dim);
  Spectrum s;
  if (is_diagonal(h)) return from_diagonal(h, k, options.keep_vectors);
  if (dim <= options.dense_limit && !options.force_iterative) {
    s = from_dense(Eigen::MatrixXd(h), k, true);
  } else {
    s = block_lanczos(h, k, options);
  }
  fill_residuals(s, h);
  if (!options.keep_vectors) s.vectors.resize(0, 0);
  return s;
}

Spectrum lowest_spectrum(const Eigen::MatrixXd& h, std::size_t k, const EigenOptions& options) {
  if (h.rows() != h.cols()) throw ParameterError("matrix must be square");
  const auto dim = static_cast<std::size_t>(h.rows());
  check_k(k, dim);
  if (dim <= options.dense_limit && !options.force_iterative) {
    Spectrum s = from_dense(h, k, true);
    s.residuals.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const Eigen::VectorXd v = s.vectors.col(static_cast<Eigen::Index>(i));
      s.residuals[i] = (h * v - s.values[i] * v).norm();
    }
    if (!options.keep_vectors) s.vectors.resize(0, 0);
    return s;
  }
  return lowest_spectrum(SparseMatrix(h.sparseView()), k, options);
}

void label_gp(Spectrum& s, const SparseMatrix& g, double rel_tol) {
  if (s.vectors.cols() != static_cast<Eigen::Index>(s.values.size()))
    throw ParameterError("G_p labels need eigenvectors");
  s.gp.assign(s.values.size(), 0);
  for (const auto& [first, count] : s.groups(rel_tol)) {
    const Eigen::MatrixXd v = s.vectors.middleCols(static_cast<Eigen::Index>(first),
                                                   static_cast<Eigen::Index>(count));
    Eigen::MatrixXd m = v.transpose() * (g * v);
    m = 0.5 * (m + m.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    for (std::size_t i = 0; i < count; ++i) {
      const double lbl = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
      if (std::abs(lbl - 1.0) < 1e-6)
        s.gp[first + i] = 1;
      else if (std::abs(lbl + 1.0) < 1e-6)
        s.gp[first + i] = -1;
    }
  }
}

}  // namespace semion
