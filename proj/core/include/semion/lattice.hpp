#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "semion/random.hpp"

namespace semion {

/// Effective 1D spinon chain. Energies and rates are in units of the hopping
/// Gamma, times in units of 1/Gamma. The chain hopping equals twice the
/// per-leg amplitude of the two-leg ladder it stands in for.
struct ChainSpec {
  std::size_t length = 25;
  double hopping = 1.0;
  double dephasing = 0.5;
  std::size_t origin = 12;

  /// Chain with the origin on the centre site, (L-1)/2.
  static ChainSpec centered(std::size_t length, double hopping = 1.0, double dephasing = 0.5);

  /// Throws ParameterError unless L >= 2, origin < L and dephasing >= 0.
  void validate() const;
};

/// Vison occupation of the L-1 bonds; bond i joins sites (i, i+1).
class VisonConfig {
 public:
  VisonConfig() = default;
  /// Empty configuration on a chain of `sites` sites.
  explicit VisonConfig(std::size_t sites);
  VisonConfig(std::vector<bool> bonds, double density);

  /// Parses a '0'/'1' string of length L-1.
  static VisonConfig from_string(const std::string& bits, double density = 0.5);

  std::size_t sites() const noexcept { return bonds_.size() + 1; }
  std::size_t bond_count() const noexcept { return bonds_.size(); }
  bool has_vison(std::size_t bond) const { return bonds_.at(bond); }
  void set(std::size_t bond, bool occupied) { bonds_.at(bond) = occupied; }
  void flip(std::size_t bond) { bonds_.at(bond) = !bonds_.at(bond); }
  double density() const noexcept { return density_; }
  std::size_t occupied_count() const noexcept;
  const std::vector<bool>& bonds() const noexcept { return bonds_; }

  std::string to_string() const;

  friend bool operator==(const VisonConfig& a, const VisonConfig& b) { return a.bonds_ == b.bonds_; }

 private:
  std::vector<bool> bonds_;
  double density_ = 0.0;
};

/// Maximal vison-free interval [left, right] of sites, inclusive. l and r
/// are the distances from a reference site to the two ends.
struct Segment {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t l = 0;
  std::size_t r = 0;

  std::size_t size() const noexcept { return right - left + 1; }
  bool contains(std::size_t site) const noexcept { return site >= left && site <= right; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// i.i.d. Bernoulli(rho_v) occupation of each bond.
VisonConfig sample_vison_config(std::size_t sites, double rho_v, Rng& rng);

/// Segments in left-to-right order; l and r are measured from each segment's
/// own left end (l = 0, r = size - 1).
std::vector<Segment> segments(const VisonConfig& config);

/// The segment holding `site`, with l = site - left and r = right - site.
Segment segment_containing(const VisonConfig& config, std::size_t site);

}  // namespace semion
