#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "semion/random.hpp"
#include "semion/trajectory.hpp"

namespace semion {

/// Gaussian site energies (mean 0, std sigma) seen by the classical walker.
struct PinningLandscape {
  std::vector<double> energies;
  double sigma = 0.0;
  double temperature = 1.0;
  std::uint64_t seed = 0;

  std::size_t sites() const noexcept { return energies.size(); }
};

PinningLandscape sample_landscape(std::size_t sites, double sigma, double temperature, Rng& rng);

/// One Monte Carlo step: choose left or right with probability 1/2 and accept
/// with min(1, exp(-dE/T)). Moves off the chain are rejected.
std::size_t metropolis_step(const PinningLandscape& landscape, std::size_t position, Rng& rng);

/// Fraction of `steps` steps spent on each site, starting from `start` and
/// counting the state after every step.
std::vector<double> stationary_occupation(const PinningLandscape& landscape, std::size_t start,
                                          std::size_t steps, Rng& rng);

/// Boltzmann weights exp(-E_s/T), normalized.
std::vector<double> boltzmann_weights(const PinningLandscape& landscape);

/// Walkers start on the centre site (L-1)/2; one attempted move per unit of
/// Monte Carlo time, so the state at time t is after floor(t) attempts.
/// History i uses a fresh landscape from the Landscape substream and its moves
/// from the Walker substream.
TrajectoryResult run_rw_ensemble(std::size_t sites, double sigma, double temperature,
                                 std::span<const double> times, std::size_t n_histories,
                                 std::uint64_t seed, std::size_t workers = 0);

}  // namespace semion
