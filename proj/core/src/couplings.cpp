#include "semion/couplings.hpp"

#include <cmath>
#include <sstream>

#include "semion/errors.hpp"
#include "semion/parallel.hpp"

namespace semion {

std::array<StarLevel, 3> single_star_levels(double J, double gamma0) {
  if (!(J > 0.0)) throw ParameterError("J must be > 0");
  const double g = std::abs(gamma0);
  const double outer = std::sqrt(16.0 * J * J + g * g);
  return {StarLevel{-4.0 * std::sqrt(4.0 * J * J + g * g), 8, +1},
          StarLevel{-outer - 3.0 * g, 8, -1}, StarLevel{-outer - g, 32, +1}};
}

Spectrum z2_two_star_spectrum(double lambda, double gamma, int boundary_parity) {
  if (!(lambda > 0.0)) throw ParameterError("lambda must be > 0");
  if (boundary_parity != 1 && boundary_parity != -1)
    throw ParameterError("boundary parity must be +1 or -1");
  // Basis |z_t z_b>, bit 0 = top, bit 1 = bottom, bit set = down.
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  for (int s = 0; s < 4; ++s) {
    const int zt = (s & 1) ? -1 : 1;
    const int zb = (s & 2) ? -1 : 1;
    h(s, s) = -lambda * (1 + boundary_parity) * zt * zb;
    h(s, s ^ 1) -= gamma / 2.0;
    h(s, s ^ 2) -= gamma / 2.0;
  }
  return lowest_spectrum(Eigen::MatrixXd(h), 4);
}

EffectiveCouplings extract_couplings(const Spectrum& even, const Spectrum& odd) {
  if (odd.size() < 4 || even.size() < 1)
    throw ParameterError("extraction needs 4 odd-sector levels and 1 even-sector level");
  Spectrum four;
  four.values.assign(odd.values.begin(), odd.values.begin() + 4);
  // A 1-2-1 pattern whose last level continues into a larger group is not a
  // quadruplet; a flat group of four or more still gives delta_h = 0.
  const bool spills = odd.size() > 4 && nearly_equal(odd.values[3], odd.values[4]);
  const auto g = four.groups();
  const bool split = g.size() == 3 && g[0].second == 1 && g[1].second == 2 && g[2].second == 1;
  const bool flat = g.size() == 1;
  if (!(flat || (split && !spills))) {
    std::ostringstream msg;
    msg << "odd-sector quadruplet is not 1-2-1 (levels";
    for (double v : four.values) msg << ' ' << v;
    msg << "); close to a level crossing";
    throw StructureError(msg.str());
  }
  EffectiveCouplings c;
  c.delta_h = four.values[3] - four.values[0];
  c.delta_s = 0.5 * (four.values[1] + four.values[2]) - even.values[0];
  c.lambda = c.delta_s / 2.0;
  c.half_gamma = c.delta_h / 4.0;
  return c;
}

TwoStarResult two_star_couplings(double J, double gamma0, std::optional<double> K, std::size_t levels,
                                 std::optional<double> gamma_g, const EigenOptions& eigen) {
  TwoStarResult out;
  for (Sector sector : {Sector::Even, Sector::Odd}) {
    StarAssembly a = StarAssembly::two_star(J, gamma0, sector, K);
    if (gamma_g) a.gamma_g = *gamma_g;
    Spectrum s = lowest_spectrum(build_star_hamiltonian(a), levels, eigen);
    label_gp(s, build_gp_operator(a));
    (sector == Sector::Even ? out.even : out.odd) = std::move(s);
  }
  out.couplings = extract_couplings(out.even, out.odd);
  return out;
}

std::optional<double> first_crossing(std::span<const double> x, std::span<const double> a,
                                     std::span<const double> b) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double d0 = a[i] - b[i];
    const double d1 = a[i + 1] - b[i + 1];
    if (d0 == 0.0) return x[i];
    if ((d0 < 0.0) != (d1 < 0.0) || d1 == 0.0) return x[i] + (x[i + 1] - x[i]) * d0 / (d0 - d1);
  }
  return std::nullopt;
}

CouplingMap coupling_map(double J, std::span<const double> gamma0_grid, std::optional<double> K,
                         std::size_t workers) {
  if (gamma0_grid.empty()) throw ParameterError("gamma0 grid must be non-empty");
  for (std::size_t i = 1; i < gamma0_grid.size(); ++i)
    if (!(gamma0_grid[i] > gamma0_grid[i - 1])) throw ParameterError("gamma0 grid must be ascending");
  CouplingMap map;
  map.rows.resize(gamma0_grid.size());
  parallel_for(gamma0_grid.size(), workers ? workers : default_worker_count(), [&](std::size_t i) {
    CouplingRow& row = map.rows[i];
    row.gamma0 = gamma0_grid[i];
    try {
      row.couplings = two_star_couplings(J, row.gamma0, K).couplings;
    } catch (const StructureError& e) {
      row.error = e.what();
    }
  });
  std::vector<double> x, lam, hop;
  for (const auto& row : map.rows) {
    if (!row.couplings) continue;
    x.push_back(row.gamma0);
    lam.push_back(row.couplings->lambda);
    hop.push_back(row.couplings->half_gamma);
  }
  map.crossing = first_crossing(x, lam, hop);
  return map;
}

}  // namespace semion
