#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "semion/ensemble.hpp"
#include "semion/lattice.hpp"
#include "semion/random.hpp"
#include "semion/trajectory.hpp"

namespace semion {

/// Poisson update times on [0, t_max]; gaps are i.i.d. exponential, mean delta_t.
struct StroboSchedule {
  double delta_t = 1.0;
  double t_max = 0.0;
  std::vector<double> events;  // strictly ascending, within [0, t_max]
};

StroboSchedule poisson_event_times(double delta_t, double t_max, Rng& rng);

/// Flips both bonds adjacent to `site`; an end site flips its single bond.
VisonConfig apply_site_update(const VisonConfig& config, std::size_t site);

struct StroboOptions {
  double rho_v = 0.5;  // initial vison density
  EnsembleOptions ensemble{};
};

/// Hybrid dynamics: the spinon evolves under the current vison background and
/// a uniformly chosen site is updated at each Poisson event. The density
/// matrix carries over unchanged across updates. History i draws its initial
/// configuration from the Visons substream and its schedule and sites from the
/// Events substream.
TrajectoryResult evolve_strobo(const ChainSpec& spec, double delta_t, std::span<const double> times,
                               std::size_t n_histories, std::uint64_t seed,
                               const StroboOptions& options = {});

}  // namespace semion
