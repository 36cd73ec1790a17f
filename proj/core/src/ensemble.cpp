#include "semion/ensemble.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "semion/errors.hpp"
#include "semion/parallel.hpp"

namespace semion {

namespace {

using Profiles = std::vector<std::vector<double>>;

Profiles embed(const std::vector<DensityMatrix>& snaps, std::size_t sites, std::size_t first) {
  Profiles out(snaps.size(), std::vector<double>(sites, 0.0));
  for (std::size_t k = 0; k < snaps.size(); ++k) {
    const auto p = density_profile(snaps[k]);
    for (std::size_t s = 0; s < p.size(); ++s) out[k][first + s] = p[s];
  }
  return out;
}

// Clean segment of length l + r + 1 with the spinon l sites from its left end.
Profiles evolve_clean_segment(const ChainSpec& spec, std::size_t l, std::size_t r,
                              std::span<const double> times, const IntegratorOptions& integrator) {
  const std::size_t n = l + r + 1;
  HoppingMatrix h(std::vector<double>(n, 0.0), std::vector<double>(n - 1, -spec.hopping));
  const auto snaps = evolve(h, spec.dephasing, DensityMatrix::localized(n, l), times, integrator);
  return embed(snaps, spec.length, spec.origin - l);
}

std::size_t resolve_workers(std::size_t w) { return w == 0 ? default_worker_count() : w; }

}  // namespace

Profiles evolve_realization(const ChainSpec& spec, const VisonConfig& visons,
                            const DisorderRealization* disorder, std::span<const double> times,
                            bool segment_reduction, const IntegratorOptions& integrator) {
  validate_times(times);
  const HoppingMatrix h = build_hamiltonian(spec, visons, disorder);
  const bool bridged = disorder && disorder->has_bond_disorder();
  if (segment_reduction && !bridged) {
    const Segment seg = segment_containing(visons, spec.origin);
    const HoppingMatrix block = h.block(seg.left, seg.size());
    const auto snaps = evolve(block, spec.dephasing, DensityMatrix::localized(seg.size(), seg.l),
                              times, integrator);
    return embed(snaps, spec.length, seg.left);
  }
  const auto snaps =
      evolve(h, spec.dephasing, DensityMatrix::localized(spec.length, spec.origin), times, integrator);
  return embed(snaps, spec.length, 0);
}

TrajectoryResult run_base_ensemble(const ChainSpec& spec, double rho_v, std::size_t n_realizations,
                                   std::span<const double> times, std::uint64_t seed,
                                   std::optional<DisorderParams> disorder,
                                   const EnsembleOptions& options) {
  spec.validate();
  validate_times(times);
  if (n_realizations == 0) throw ParameterError("n_realizations must be >= 1");
  if (!(rho_v >= 0.0 && rho_v <= 1.0)) throw ParameterError("rho_v must lie in [0, 1]");
  if (disorder && (disorder->sigma0 < 0.0 || disorder->sigma1 < 0.0))
    throw ParameterError("disorder standard deviations must be >= 0");
  const std::size_t workers = resolve_workers(options.workers);
  const std::vector<double> t(times.begin(), times.end());
  TrajectoryAccumulator acc(t, spec.length, spec.origin);

  const bool clean = !disorder || !disorder->any();
  if (clean && options.segment_reduction) {
    // Every realization is fixed by its origin segment (l, r); evolve each
    // distinct segment once.
    std::vector<std::pair<std::size_t, std::size_t>> key(n_realizations);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < n_realizations; ++i) {
      Rng rng = substream(seed, i, StreamPurpose::Visons);
      const Segment seg = segment_containing(sample_vison_config(spec.length, rho_v, rng), spec.origin);
      key[i] = {seg.l, seg.r};
      index.emplace(key[i], 0);
    }
    std::vector<std::pair<std::size_t, std::size_t>> unique;
    for (auto& [k, slot] : index) {
      slot = unique.size();
      unique.push_back(k);
    }
    std::vector<std::optional<Profiles>> results(unique.size());
    parallel_for(unique.size(), workers, [&](std::size_t u) {
      try {
        results[u] = evolve_clean_segment(spec, unique[u].first, unique[u].second, t,
                                          options.integrator);
      } catch (const NumericalError&) {
        results[u].reset();
      }
    });
    for (std::size_t i = 0; i < n_realizations; ++i) {
      const auto& res = results[index.at(key[i])];
      if (res)
        acc.add(*res);
      else
        acc.add_failure();
    }
  } else {
    const std::size_t chunk = std::max<std::size_t>(1, options.chunk);
    std::vector<std::optional<Profiles>> results;
    for (std::size_t start = 0; start < n_realizations; start += chunk) {
      const std::size_t count = std::min(chunk, n_realizations - start);
      results.assign(count, std::nullopt);
      parallel_for(count, workers, [&](std::size_t j) {
        const std::size_t i = start + j;
        Rng vrng = substream(seed, i, StreamPurpose::Visons);
        const VisonConfig visons = sample_vison_config(spec.length, rho_v, vrng);
        std::optional<DisorderRealization> dis;
        if (disorder) {
          Rng drng = substream(seed, i, StreamPurpose::Disorder);
          dis = sample_disorder(spec.length, disorder->sigma0, disorder->sigma1, drng);
          dis->seed = seed;
        }
        try {
          results[j] = evolve_realization(spec, visons, dis ? &*dis : nullptr, t,
                                          options.segment_reduction, options.integrator);
        } catch (const NumericalError&) {
          results[j].reset();
        }
      });
      for (auto& res : results) {
        if (res)
          acc.add(*res);
        else
          acc.add_failure();
      }
    }
  }
  check_failure_rate(acc.failed(), n_realizations);
  return acc.finish(seed);
}

}  // namespace semion
