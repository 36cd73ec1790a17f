#include "semion/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "semion/errors.hpp"

namespace semion {

ChainSpec ChainSpec::centered(std::size_t length, double hopping, double dephasing) {
  ChainSpec spec;
  spec.length = length;
  spec.hopping = hopping;
  spec.dephasing = dephasing;
  spec.origin = length == 0 ? 0 : (length - 1) / 2;
  return spec;
}

void ChainSpec::validate() const {
  if (length < 2) throw ParameterError("chain length must be at least 2, got " + std::to_string(length));
  if (origin >= length)
    throw ParameterError("origin " + std::to_string(origin) + " outside chain of length " +
                         std::to_string(length));
  if (!(dephasing >= 0.0) || !std::isfinite(dephasing))
    throw ParameterError("dephasing rate must be finite and >= 0");
  if (!std::isfinite(hopping)) throw ParameterError("hopping must be finite");
}

VisonConfig::VisonConfig(std::size_t sites) : bonds_(sites > 0 ? sites - 1 : 0, false) {}

VisonConfig::VisonConfig(std::vector<bool> bonds, double density)
    : bonds_(std::move(bonds)), density_(density) {}

VisonConfig VisonConfig::from_string(const std::string& bits, double density) {
  std::vector<bool> bonds;
  bonds.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParameterError("vison string may only contain '0' and '1'");
    bonds.push_back(c == '1');
  }
  return VisonConfig(std::move(bonds), density);
}

std::size_t VisonConfig::occupied_count() const noexcept {
  return static_cast<std::size_t>(std::count(bonds_.begin(), bonds_.end(), true));
}

std::string VisonConfig::to_string() const {
  std::string s(bonds_.size(), '0');
  for (std::size_t i = 0; i < bonds_.size(); ++i)
    if (bonds_[i]) s[i] = '1';
  return s;
}

VisonConfig sample_vison_config(std::size_t sites, double rho_v, Rng& rng) {
  if (sites < 2) throw ParameterError("vison sampling needs at least 2 sites");
  if (!(rho_v >= 0.0 && rho_v <= 1.0)) throw ParameterError("rho_v must lie in [0, 1]");
  std::vector<bool> bonds(sites - 1, false);
  std::bernoulli_distribution occupied(rho_v);
  for (std::size_t i = 0; i < bonds.size(); ++i) bonds[i] = occupied(rng);
  return VisonConfig(std::move(bonds), rho_v);
}

std::vector<Segment> segments(const VisonConfig& config) {
  std::vector<Segment> out;
  const std::size_t n = config.sites();
  std::size_t start = 0;
  for (std::size_t bond = 0; bond < config.bond_count(); ++bond) {
    if (config.has_vison(bond)) {
      out.push_back({start, bond, 0, bond - start});
      start = bond + 1;
    }
  }
  out.push_back({start, n - 1, 0, n - 1 - start});
  return out;
}

Segment segment_containing(const VisonConfig& config, std::size_t site) {
  if (site >= config.sites())
    throw ParameterError("site " + std::to_string(site) + " outside chain of " +
                         std::to_string(config.sites()) + " sites");
  std::size_t left = site;
  while (left > 0 && !config.has_vison(left - 1)) --left;
  std::size_t right = site;
  while (right + 1 < config.sites() && !config.has_vison(right)) ++right;
  return {left, right, site - left, right - site};
}

}  // namespace semion
