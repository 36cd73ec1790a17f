#include "semion/vison_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "semion/errors.hpp"
#include "semion/lindblad.hpp"
#include "semion/parallel.hpp"

namespace semion {

StroboSchedule poisson_event_times(double delta_t, double t_max, Rng& rng) {
  if (!(delta_t > 0.0) || !std::isfinite(delta_t)) throw ParameterError("delta_t must be > 0");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ParameterError("t_max must be > 0");
  StroboSchedule s{delta_t, t_max, {}};
  std::exponential_distribution<double> gap(1.0 / delta_t);
  double t = 0.0;
  for (;;) {
    t += gap(rng);
    if (t > t_max) break;
    // Equal consecutive times would be a zero gap; exponential draws are
    // strictly positive so ascent is strict up to rounding.
    if (!s.events.empty() && t <= s.events.back()) continue;
    s.events.push_back(t);
  }
  return s;
}

VisonConfig apply_site_update(const VisonConfig& config, std::size_t site) {
  if (site >= config.sites()) throw ParameterError("update site outside the chain");
  VisonConfig out = config;
  if (site > 0) out.flip(site - 1);
  if (site + 1 < config.sites()) out.flip(site);
  return out;
}

namespace {

using Profiles = std::vector<std::vector<double>>;

Profiles run_history(const ChainSpec& spec, double delta_t, const std::vector<double>& times,
                     std::size_t index, std::uint64_t seed, const StroboOptions& opt) {
  Rng vrng = substream(seed, index, StreamPurpose::Visons);
  VisonConfig visons = sample_vison_config(spec.length, opt.rho_v, vrng);
  Rng erng = substream(seed, index, StreamPurpose::Events);
  const double t_end = std::max(times.back(), 1e-300);
  const StroboSchedule schedule = poisson_event_times(delta_t, t_end, erng);
  std::uniform_int_distribution<std::size_t> pick(0, spec.length - 1);

  // rho lives on the window [lo, hi], a union of segments that contains its
  // support. Sites outside stay exactly unoccupied until a cut opens.
  const Segment seg = segment_containing(visons, spec.origin);
  const bool windowed = opt.ensemble.segment_reduction;
  std::size_t lo = windowed ? seg.left : 0;
  std::size_t hi = windowed ? seg.right : spec.length - 1;
  DensityMatrix rho = DensityMatrix::localized(hi - lo + 1, spec.origin - lo);
  HoppingMatrix full = build_hamiltonian(spec, visons);
  HoppingMatrix h = full.block(lo, hi - lo + 1);

  Profiles out;
  out.reserve(times.size());
  double now = 0.0;
  std::size_t next_obs = 0;
  std::size_t next_event = 0;

  auto advance_to = [&](double target) {
    if (target > now) {
      const double dt[1] = {target - now};
      rho = evolve(h, spec.dephasing, rho, dt, opt.ensemble.integrator).front();
      now = target;
    }
  };

  auto regrow = [&] {
    std::size_t new_lo = lo;
    std::size_t new_hi = hi;
    while (new_lo > 0 && !visons.has_vison(new_lo - 1)) --new_lo;
    while (new_hi + 1 < spec.length && !visons.has_vison(new_hi)) ++new_hi;
    if (new_lo != lo || new_hi != hi) {
      const auto n = static_cast<Eigen::Index>(new_hi - new_lo + 1);
      Eigen::MatrixXcd grown = Eigen::MatrixXcd::Zero(n, n);
      grown.block(static_cast<Eigen::Index>(lo - new_lo), static_cast<Eigen::Index>(lo - new_lo),
                  rho.matrix().rows(), rho.matrix().cols()) = rho.matrix();
      rho = DensityMatrix(std::move(grown));
      lo = new_lo;
      hi = new_hi;
    }
    h = full.block(lo, hi - lo + 1);
  };

  while (next_obs < times.size()) {
    const bool event_first =
        next_event < schedule.events.size() && schedule.events[next_event] < times[next_obs];
    if (event_first) {
      advance_to(schedule.events[next_event]);
      visons = apply_site_update(visons, pick(erng));
      full = build_hamiltonian(spec, visons);
      regrow();
      ++next_event;
    } else {
      advance_to(times[next_obs]);
      std::vector<double> profile(spec.length, 0.0);
      const auto p = density_profile(rho);
      std::copy(p.begin(), p.end(), profile.begin() + static_cast<std::ptrdiff_t>(lo));
      out.push_back(std::move(profile));
      ++next_obs;
    }
  }
  return out;
}

}  // namespace

TrajectoryResult evolve_strobo(const ChainSpec& spec, double delta_t, std::span<const double> times,
                               std::size_t n_histories, std::uint64_t seed,
                               const StroboOptions& options) {
  spec.validate();
  validate_times(times);
  if (n_histories == 0) throw ParameterError("n_histories must be >= 1");
  if (!(delta_t > 0.0)) throw ParameterError("delta_t must be > 0");
  if (!(options.rho_v >= 0.0 && options.rho_v <= 1.0)) throw ParameterError("rho_v must lie in [0, 1]");
  const std::vector<double> t(times.begin(), times.end());
  const std::size_t workers =
      options.ensemble.workers == 0 ? default_worker_count() : options.ensemble.workers;
  const std::size_t chunk = std::max<std::size_t>(1, options.ensemble.chunk);
  TrajectoryAccumulator acc(t, spec.length, spec.origin);
  std::vector<std::optional<Profiles>> results;
  for (std::size_t start = 0; start < n_histories; start += chunk) {
    const std::size_t count = std::min(chunk, n_histories - start);
    results.assign(count, std::nullopt);
    parallel_for(count, workers, [&](std::size_t j) {
      try {
        results[j] = run_history(spec, delta_t, t, start + j, seed, options);
      } catch (const NumericalError&) {
        results[j].reset();
      }
    });
    for (auto& r : results) {
      if (r)
        acc.add(*r);
      else
        acc.add_failure();
    }
  }
  check_failure_rate(acc.failed(), n_histories);
  return acc.finish(seed);
}

}  // namespace semion
