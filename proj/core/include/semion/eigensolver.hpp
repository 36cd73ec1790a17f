#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "semion/star_hamiltonian.hpp"

namespace semion {

/// Ascending eigenvalues with optional eigenvectors and G_p labels.
struct Spectrum {
  std::vector<double> values;
  Eigen::MatrixXd vectors;        // columns match `values`; may be empty
  std::vector<int> gp;            // +1 / -1 per level, 0 if undetermined; may be empty
  std::vector<double> residuals;  // ||H v - e v|| per level when vectors are present
  std::size_t iterations = 0;     // restarts used by the iterative path

  std::size_t size() const noexcept { return values.size(); }
  /// (first index, size) of each degeneracy group, relative tolerance `rel_tol`.
  std::vector<std::pair<std::size_t, std::size_t>> groups(double rel_tol = 1e-9) const;
};

/// True when |a - b| <= rel_tol * max(1, |a|, |b|).
bool nearly_equal(double a, double b, double rel_tol = 1e-9);

struct EigenOptions {
  std::size_t dense_limit = 1024;  // dense solver at or below this dimension
  bool force_iterative = false;
  double residual_tol = 1e-10;
  std::size_t block_size = 0;      // 0: k + 4
  std::size_t max_restarts = 500;
  bool keep_vectors = true;
};

/// k smallest eigenvalues of a real symmetric matrix. Exactly diagonal input
/// is read off directly. Throws NumericalError if the iterative solver does
/// not reach the residual tolerance.
Spectrum lowest_spectrum(const SparseMatrix& h, std::size_t k, const EigenOptions& options = {});
Spectrum lowest_spectrum(const Eigen::MatrixXd& h, std::size_t k, const EigenOptions& options = {});

/// Fills spectrum.gp by diagonalizing G within each degeneracy group. Levels
/// of a group cut off at the end of the spectrum are labeled 0.
void label_gp(Spectrum& spectrum, const SparseMatrix& g, double rel_tol = 1e-9);

}  // namespace semion
