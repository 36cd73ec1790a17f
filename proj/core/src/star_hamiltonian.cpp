#include "semion/star_hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "semion/errors.hpp"

namespace semion {

Eigen::Matrix4d hadamard_w() {
  Eigen::Matrix4d w = Eigen::Matrix4d::Ones();
  w.diagonal().setConstant(-1.0);
  return w;
}

StarAssembly StarAssembly::single(double J, double gamma_m, double gamma_g) {
  StarAssembly a;
  a.stars = 1;
  a.J = J;
  a.gamma_m = gamma_m;
  a.gamma_g = gamma_g;
  return a;
}

StarAssembly StarAssembly::two_star(double J, double gamma0, Sector sector, std::optional<double> K) {
  StarAssembly a;
  a.J = J;
  a.gamma_m = gamma0;
  a.gamma_g = gamma0;
  a.K = K;
  if (sector == Sector::Odd) a.pins[0] = -1;
  return a;
}

std::size_t StarAssembly::gauge_spins() const {
  if (free_gauge_spins != 0) return free_gauge_spins;
  if (stars == 1) return 4;
  return K ? 4 : 2;
}

std::size_t StarAssembly::dimension() const {
  const std::size_t n = spin_count();
  if (n >= 63) return std::size_t(-1);
  return std::size_t{1} << n;
}

int StarAssembly::boundary_parity() const noexcept {
  return pins[0] * pins[1] * pins[2] * pins[3];
}

void StarAssembly::validate() const {
  if (stars != 1 && stars != 2) throw ParameterError("stars must be 1 or 2");
  for (double v : {J, gamma_m, gamma_g})
    if (!std::isfinite(v)) throw ParameterError("star couplings must be finite");
  if (K && !std::isfinite(*K)) throw ParameterError("K must be finite");
  if (stars == 1 && K) throw ParameterError("the K coupling needs two stars");
  if (stars == 2)
    for (int p : pins)
      if (p != 1 && p != -1) throw ParameterError("pinned gauge spins must be +1 or -1");
  std::array<int, 4> seen{0, 0, 0, 0};
  for (Leg l : leg_order) ++seen[static_cast<int>(l)];
  if (seen != std::array<int, 4>{1, 1, 1, 1})
    throw ParameterError("leg order must be a permutation of the four legs");
  const std::size_t expected = stars == 1 ? 4 : (K ? 4 : 2);
  if (gauge_spins() != expected)
    throw ParameterError("free_gauge_spins=" + std::to_string(gauge_spins()) +
                         " is inconsistent with this geometry (expected " +
                         std::to_string(expected) + ")");
  if (dimension() > max_dimension)
    throw CapacityError("Hilbert dimension " + std::to_string(dimension()) +
                        " exceeds the configured limit " + std::to_string(max_dimension));
}

namespace {

inline int zval(std::uint32_t s, std::size_t bit) { return ((s >> bit) & 1u) ? -1 : 1; }

// Values of the four legs (indexed by Leg) of star `k` in basis state s.
std::array<int, 4> leg_values(const StarAssembly& a, std::uint32_t s, int k) {
  if (a.stars == 1) return {zval(s, 4), zval(s, 5), zval(s, 6), zval(s, 7)};
  const bool paired = a.K.has_value();
  const int top_left = zval(s, 8);
  const int top_right = paired ? zval(s, 9) : top_left;
  const int bottom_left = paired ? zval(s, 10) : zval(s, 9);
  const int bottom_right = paired ? zval(s, 11) : bottom_left;
  if (k == 0) return {a.pins[0], a.pins[1], top_left, bottom_left};
  return {top_right, bottom_right, a.pins[2], a.pins[3]};
}

}  // namespace

std::vector<double> star_diagonal(const StarAssembly& a) {
  a.validate();
  const std::size_t dim = a.dimension();
  const Eigen::Matrix4d w = hadamard_w();
  std::vector<double> diag(dim);
  for (std::uint32_t s = 0; s < dim; ++s) {
    // Integer sums first so that energies of gauge-equivalent states agree
    // to the last bit.
    long coupling = 0;
    for (int k = 0; k < a.stars; ++k) {
      const auto legs = leg_values(a, s, k);
      for (int row = 0; row < 4; ++row) {
        const int mu = zval(s, static_cast<std::size_t>(4 * k + row));
        for (int c = 0; c < 4; ++c)
          coupling += static_cast<long>(w(row, c)) * mu * legs[static_cast<int>(a.leg_order[c])];
      }
    }
    double e = -a.J * static_cast<double>(coupling);
    if (a.K) {
      const long links = zval(s, 8) * zval(s, 9) + zval(s, 10) * zval(s, 11);
      e -= *a.K * static_cast<double>(links);
    }
    diag[s] = e;
  }
  return diag;
}

SparseMatrix build_star_hamiltonian(const StarAssembly& a) {
  const auto diag = star_diagonal(a);
  const std::size_t dim = diag.size();
  const std::size_t n = a.spin_count();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(dim * (n + 1));
  for (std::uint32_t s = 0; s < dim; ++s) {
    triplets.emplace_back(s, s, diag[s]);
    for (std::size_t bit = 0; bit < n; ++bit) {
      const double g = bit < a.matter_spins() ? a.gamma_m : a.gamma_g;
      if (g != 0.0) triplets.emplace_back(s, s ^ (1u << bit), -g);
    }
  }
  SparseMatrix h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  h.setFromTriplets(triplets.begin(), triplets.end());
  return h;
}

SignedInvolution compensating_involution(const std::array<int, 4>& column_signs) {
  const Eigen::Matrix4d w = hadamard_w();
  std::vector<std::array<int, 4>> candidates{
      {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0},                               // pair swaps
      {0, 1, 2, 3},                                                          // identity
      {1, 0, 2, 3}, {2, 1, 0, 3}, {3, 1, 2, 0}, {0, 2, 1, 3}, {0, 3, 2, 1}, {0, 1, 3, 2}};
  for (const auto& perm : candidates) {
    SignedInvolution f{perm, {0, 0, 0, 0}};
    bool ok = true;
    for (int b = 0; b < 4 && ok; ++b) {
      // flip_{perm(b)} is fixed by column 0 and must agree with the others.
      int sign = 0;
      for (int c = 0; c < 4; ++c) {
        const int needed = static_cast<int>(w(b, c) / (w(perm[b], c) * column_signs[c]));
        if (sign == 0)
          sign = needed;
        else if (sign != needed)
          ok = false;
      }
      if (f.flip[perm[b]] != 0 && f.flip[perm[b]] != sign) ok = false;
      f.flip[perm[b]] = sign;
    }
    if (ok) return f;
  }
  throw StructureError("no signed involution compensates the requested column flips");
}

std::vector<std::uint32_t> gp_permutation(const StarAssembly& a) {
  a.validate();
  if (a.stars != 2) throw ParameterError("G_p needs a two-star assembly");
  // B_p flips the shared legs: the left star's right legs and the right
  // star's left legs.
  std::array<int, 4> left_signs{}, right_signs{};
  for (int c = 0; c < 4; ++c) {
    const Leg leg = a.leg_order[c];
    const bool right_leg = leg == Leg::RightTop || leg == Leg::RightBottom;
    left_signs[c] = right_leg ? -1 : 1;
    right_signs[c] = right_leg ? 1 : -1;
  }
  const SignedInvolution fl = compensating_involution(left_signs);
  const SignedInvolution fr = compensating_involution(right_signs);

  const std::size_t dim = a.dimension();
  const std::size_t n = a.spin_count();
  std::uint32_t link_mask = 0;
  for (std::size_t bit = 8; bit < n; ++bit) link_mask |= 1u << bit;

  std::vector<std::uint32_t> perm(dim);
  for (std::uint32_t s = 0; s < dim; ++s) {
    std::uint32_t t = s ^ link_mask;
    for (int k = 0; k < 2; ++k) {
      const SignedInvolution& f = k == 0 ? fl : fr;
      const int base = 4 * k;
      for (int row = 0; row < 4; ++row) {
        // mu'_row = flip_row * mu_{perm(row)}
        const int mu = f.flip[row] * zval(s, static_cast<std::size_t>(base + f.perm[row]));
        const std::uint32_t bit = 1u << (base + row);
        t = mu == -1 ? (t | bit) : (t & ~bit);
      }
    }
    perm[s] = t;
  }
  return perm;
}

SparseMatrix build_gp_operator(const StarAssembly& a) {
  const auto perm = gp_permutation(a);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(perm.size());
  for (std::uint32_t s = 0; s < perm.size(); ++s) triplets.emplace_back(perm[s], s, 1.0);
  SparseMatrix g(static_cast<Eigen::Index>(perm.size()), static_cast<Eigen::Index>(perm.size()));
  g.setFromTriplets(triplets.begin(), triplets.end());
  return g;
}

}  // namespace semion
