#include "semion/segment_analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "semion/errors.hpp"
#include "semion/lindblad.hpp"
#include "semion/parallel.hpp"

namespace semion {

double segment_probability(long l, long r) {
  if (l < 0 || r < 0) throw ParameterError("segment extents must be >= 0");
  return std::ldexp(1.0, -static_cast<int>(std::min<long>(l + r + 2, 2000)));
}

double truncated_mass(std::size_t cutoff) {
  const double side = 1.0 - std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(cutoff + 1, 2000)));
  return side * side;
}

double asymptotic_density(long x, std::size_t cutoff) {
  const auto c = static_cast<long>(cutoff);
  if (std::labs(x) > c) throw ParameterError("cutoff must be >= |x|");
  // Mirror symmetric; summing at |x| keeps it bitwise symmetric.
  x = std::labs(x);
  double sum = 0.0;
  for (long l = std::max(0L, -x); l <= c; ++l)
    for (long r = std::max(0L, x); r <= c; ++r)
      sum += segment_probability(l, r) / static_cast<double>(l + r + 1);
  return sum;
}

namespace {

// Sum_{j=1}^{k} j^2.
double square_sum(long k) { return static_cast<double>(k * (k + 1) * (2 * k + 1)) / 6.0; }

}  // namespace

double plateau_msd(std::size_t cutoff) {
  if (cutoff < 1) throw ParameterError("cutoff must be >= 1");
  const auto c = static_cast<long>(cutoff);
  double sum = 0.0;
  for (long l = 0; l <= c; ++l)
    for (long r = 0; r <= c; ++r)
      sum += segment_probability(l, r) * (square_sum(l) + square_sum(r)) /
             static_cast<double>(l + r + 1);
  return sum;
}

double plateau_msd_series(std::size_t n_max) {
  double sum = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double dn = static_cast<double>(n);
    sum += std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(n + 2, 2000))) * dn * (dn + 1) *
           (dn + 2) / 6.0;
  }
  return sum;
}

std::vector<double> semi_analytic_msd(std::span<const double> times, std::size_t length,
                                      double gamma, double hopping,
                                      const SemiAnalyticOptions& options) {
  validate_times(times);
  if (length < 3 || length % 2 == 0) throw ParameterError("semi-analytic MSD needs an odd L >= 3");
  if (!(gamma >= 0.0)) throw ParameterError("gamma must be >= 0");
  const std::size_t half = length / 2;
  const std::size_t side = half + 1;
  const std::vector<double> t(times.begin(), times.end());
  std::vector<std::vector<double>> msd(side * side);
  const std::size_t workers = options.workers == 0 ? default_worker_count() : options.workers;
  parallel_for(side * side, workers, [&](std::size_t k) {
    const std::size_t l = k / side;
    const std::size_t r = k % side;
    const std::size_t n = l + r + 1;
    HoppingMatrix h(std::vector<double>(n, 0.0), std::vector<double>(n - 1, -hopping));
    const auto snaps = evolve(h, gamma, DensityMatrix::localized(n, l), t, options.integrator);
    std::vector<double> m(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) m[i] = mean_square_displacement(snaps[i], l);
    msd[k] = std::move(m);
  });
  std::vector<double> out(t.size(), 0.0);
  for (std::size_t k = 0; k < side * side; ++k) {
    const double w = segment_probability(static_cast<long>(k / side), static_cast<long>(k % side));
    for (std::size_t i = 0; i < t.size(); ++i) out[i] += w * msd[k][i];
  }
  return out;
}

}  // namespace semion
