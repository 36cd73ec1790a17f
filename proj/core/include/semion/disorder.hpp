#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "semion/random.hpp"

namespace semion {

/// Quenched disorder for one realization: Gaussian onsite energies w(d)_s
/// (std sigma0) and additive bond terms w(o)_{s,s+1} (std sigma1).
struct DisorderRealization {
  std::vector<double> onsite;  // length L
  std::vector<double> bond;    // length L-1
  double sigma0 = 0.0;
  double sigma1 = 0.0;
  std::uint64_t seed = 0;

  std::size_t sites() const noexcept { return onsite.size(); }
  bool has_bond_disorder() const noexcept;
};

struct DisorderParams {
  double sigma0 = 0.0;
  double sigma1 = 0.0;
  bool any() const noexcept { return sigma0 > 0.0 || sigma1 > 0.0; }
};

/// Onsite draws come first, then bond draws, all from `rng`.
DisorderRealization sample_disorder(std::size_t sites, double sigma0, double sigma1, Rng& rng);

}  // namespace semion
