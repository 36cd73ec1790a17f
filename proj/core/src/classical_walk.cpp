#include "semion/classical_walk.hpp"

#include <algorithm>
#include <cmath>

#include "semion/errors.hpp"
#include "semion/parallel.hpp"

namespace semion {

PinningLandscape sample_landscape(std::size_t sites, double sigma, double temperature, Rng& rng) {
  if (sites < 2) throw ParameterError("landscape needs at least 2 sites");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ParameterError("sigma must be >= 0");
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw ParameterError("temperature must be > 0");
  PinningLandscape out;
  out.sigma = sigma;
  out.temperature = temperature;
  out.energies.resize(sites);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (auto& e : out.energies) e = sigma * normal(rng);
  return out;
}

std::size_t metropolis_step(const PinningLandscape& landscape, std::size_t position, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const bool right = uniform(rng) < 0.5;
  const double u = uniform(rng);
  if (!right && position == 0) return position;
  if (right && position + 1 >= landscape.sites()) return position;
  const std::size_t target = right ? position + 1 : position - 1;
  const double de = landscape.energies[target] - landscape.energies[position];
  if (de <= 0.0 || u < std::exp(-de / landscape.temperature)) return target;
  return position;
}

std::vector<double> stationary_occupation(const PinningLandscape& landscape, std::size_t start,
                                          std::size_t steps, Rng& rng) {
  if (start >= landscape.sites()) throw ParameterError("start outside the landscape");
  if (steps == 0) throw ParameterError("steps must be >= 1");
  std::vector<double> counts(landscape.sites(), 0.0);
  std::size_t x = start;
  for (std::size_t k = 0; k < steps; ++k) {
    x = metropolis_step(landscape, x, rng);
    counts[x] += 1.0;
  }
  for (auto& c : counts) c /= static_cast<double>(steps);
  return counts;
}

std::vector<double> boltzmann_weights(const PinningLandscape& landscape) {
  const double emin = *std::min_element(landscape.energies.begin(), landscape.energies.end());
  std::vector<double> w(landscape.sites());
  double z = 0.0;
  for (std::size_t s = 0; s < w.size(); ++s) {
    w[s] = std::exp(-(landscape.energies[s] - emin) / landscape.temperature);
    z += w[s];
  }
  for (auto& v : w) v /= z;
  return w;
}

TrajectoryResult run_rw_ensemble(std::size_t sites, double sigma, double temperature,
                                 std::span<const double> times, std::size_t n_histories,
                                 std::uint64_t seed, std::size_t workers) {
  validate_times(times);
  if (sites < 2) throw ParameterError("chain needs at least 2 sites");
  if (n_histories == 0) throw ParameterError("n_histories must be >= 1");
  if (!(sigma >= 0.0)) throw ParameterError("sigma must be >= 0");
  if (!(temperature > 0.0)) throw ParameterError("temperature must be > 0");
  for (double t : times)
    if (t > 1e12) throw ParameterError("walker times must be <= 1e12 steps");
  if (workers == 0) workers = default_worker_count();
  const std::size_t origin = (sites - 1) / 2;
  const std::vector<double> t(times.begin(), times.end());

  // Each history contributes a one-hot profile per time: store the positions.
  std::vector<std::vector<std::size_t>> positions(n_histories);
  parallel_for(n_histories, workers, [&](std::size_t i) {
    Rng lrng = substream(seed, i, StreamPurpose::Landscape);
    const PinningLandscape land = sample_landscape(sites, sigma, temperature, lrng);
    Rng wrng = substream(seed, i, StreamPurpose::Walker);
    std::vector<std::size_t> pos(t.size());
    std::size_t x = origin;
    std::uint64_t done = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      const auto target = static_cast<std::uint64_t>(std::floor(t[k]));
      for (; done < target; ++done) x = metropolis_step(land, x, wrng);
      pos[k] = x;
    }
    positions[i] = std::move(pos);
  });

  TrajectoryAccumulator acc(t, sites, origin);
  std::vector<std::vector<double>> profiles(t.size(), std::vector<double>(sites, 0.0));
  for (std::size_t i = 0; i < n_histories; ++i) {
    for (std::size_t k = 0; k < t.size(); ++k) {
      std::fill(profiles[k].begin(), profiles[k].end(), 0.0);
      profiles[k][positions[i][k]] = 1.0;
    }
    acc.add(profiles);
  }
  return acc.finish(seed);
}

}  // namespace semion
