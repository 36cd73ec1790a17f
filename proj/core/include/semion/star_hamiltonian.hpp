#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace semion {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// 4x4 Hadamard coupling matrix: -1 on the diagonal, +1 elsewhere.
Eigen::Matrix4d hadamard_w();

enum class Leg { LeftTop = 0, LeftBottom = 1, RightTop = 2, RightBottom = 3 };
using LegOrder = std::array<Leg, 4>;  // order[c] is the leg on W column c

inline constexpr LegOrder kDefaultLegOrder{Leg::LeftTop, Leg::LeftBottom, Leg::RightTop,
                                           Leg::RightBottom};

enum class Sector { Even, Odd };

/// One star, or two stars sharing their top and bottom links.
///
/// Spin layout in the z basis (bit k set means sigma^z = -1): matter spins of
/// star 0 on bits 0-3 and of star 1 on bits 4-7, then free gauge spins. A
/// single star has its four legs free, in Leg order. Two plain stars share
/// free spins (top, bottom); with the K coupling each shared link is a pair
/// (top-, top+, bottom-, bottom+), the minus spin belonging to the left star.
/// Outer legs of a two-star assembly are pinned classical values, ordered
/// (left star LT, left star LB, right star RT, right star RB).
struct StarAssembly {
  int stars = 2;
  double J = 1.0;
  double gamma_m = 0.6;  // transverse field on matter spins
  double gamma_g = 0.6;  // transverse field on free gauge spins
  std::optional<double> K;
  std::array<int, 4> pins{1, 1, 1, 1};
  LegOrder leg_order = kDefaultLegOrder;
  std::size_t free_gauge_spins = 0;  // 0: the count implied by the geometry
  std::size_t max_dimension = std::size_t{1} << 20;

  static StarAssembly single(double J, double gamma_m, double gamma_g);
  /// Two stars with all pins +1 (even) or the left star's LT pin flipped (odd).
  static StarAssembly two_star(double J, double gamma0, Sector sector,
                               std::optional<double> K = std::nullopt);

  std::size_t matter_spins() const noexcept { return 4 * static_cast<std::size_t>(stars); }
  std::size_t gauge_spins() const;  // resolved free gauge spin count
  std::size_t spin_count() const { return matter_spins() + gauge_spins(); }
  std::size_t dimension() const;
  int boundary_parity() const noexcept;

  /// Throws ParameterError on inconsistent geometry or couplings and
  /// CapacityError if the Hilbert dimension exceeds max_dimension.
  void validate() const;
};

/// z-basis diagonal energy of each basis state.
std::vector<double> star_diagonal(const StarAssembly& assembly);

/// -J sum W mu^z sigma^z - Gamma_m sum mu^x - Gamma_g sum_free sigma^x
/// - K sum_links sigma^z sigma^z, real symmetric in the z basis.
SparseMatrix build_star_hamiltonian(const StarAssembly& assembly);

/// Matter-spin map mu_a -> flip[a] * mu_{perm[a]} with perm an involution.
struct SignedInvolution {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<int, 4> flip{1, 1, 1, 1};
};

/// Signed involution F with F(W) compensating sign flips `d` on the W columns,
/// W_{perm(b) c} flip_{perm(b)} d_c = W_{b c}. Pair swaps are tried first.
SignedInvolution compensating_involution(const std::array<int, 4>& column_signs);

/// G_p = F^L B_p F^R as a permutation of basis states: B_p flips every shared
/// link spin and F^L, F^R act on the two stars' matter spins.
std::vector<std::uint32_t> gp_permutation(const StarAssembly& assembly);

/// G_p as a sparse matrix.
SparseMatrix build_gp_operator(const StarAssembly& assembly);

}  // namespace semion
