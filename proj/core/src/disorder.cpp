#include "semion/disorder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semion/errors.hpp"

namespace semion {

bool DisorderRealization::has_bond_disorder() const noexcept {
  return std::any_of(bond.begin(), bond.end(), [](double w) { return w != 0.0; });
}

DisorderRealization sample_disorder(std::size_t sites, double sigma0, double sigma1, Rng& rng) {
  if (sites < 2) throw ParameterError("disorder needs at least 2 sites");
  if (!(sigma0 >= 0.0) || !std::isfinite(sigma0))
    throw ParameterError("sigma0 must be finite and >= 0, got " + std::to_string(sigma0));
  if (!(sigma1 >= 0.0) || !std::isfinite(sigma1))
    throw ParameterError("sigma1 must be finite and >= 0, got " + std::to_string(sigma1));

  DisorderRealization d;
  d.sigma0 = sigma0;
  d.sigma1 = sigma1;
  d.onsite.assign(sites, 0.0);
  d.bond.assign(sites - 1, 0.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  // Draw even when sigma is zero so the bond stream does not shift with sigma0.
  for (double& w : d.onsite) w = sigma0 * normal(rng);
  for (double& w : d.bond) w = sigma1 * normal(rng);
  return d;
}

}  // namespace semion
