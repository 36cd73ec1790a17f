#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "semion/disorder.hpp"
#include "semion/lattice.hpp"
#include "semion/lindblad.hpp"
#include "semion/trajectory.hpp"

namespace semion {

struct EnsembleOptions {
  std::size_t workers = 0;       // 0: default_worker_count()
  bool segment_reduction = true;  // evolve only the origin's segment when exact
  std::size_t chunk = 256;       // realizations evaluated between ordered reductions
  IntegratorOptions integrator{};
};

/// Density profiles [time][site] on the full chain for one realization,
/// starting from the spinon on spec.origin. When no bond disorder is present
/// and `segment_reduction` holds, only the origin's segment is integrated and
/// the rest of the profile is zero.
std::vector<std::vector<double>> evolve_realization(const ChainSpec& spec, const VisonConfig& visons,
                                                    const DisorderRealization* disorder,
                                                    std::span<const double> times,
                                                    bool segment_reduction = true,
                                                    const IntegratorOptions& integrator = {});

/// Averages over n_realizations independent vison configurations; with
/// disorder, visons are resampled together with every disorder realization.
/// Realization i draws from substream(seed, i, Visons) and
/// substream(seed, i, Disorder), and reductions run in index order, so the
/// result does not depend on the worker count.
TrajectoryResult run_base_ensemble(const ChainSpec& spec, double rho_v, std::size_t n_realizations,
                                   std::span<const double> times, std::uint64_t seed,
                                   std::optional<DisorderParams> disorder = std::nullopt,
                                   const EnsembleOptions& options = {});

}  // namespace semion
