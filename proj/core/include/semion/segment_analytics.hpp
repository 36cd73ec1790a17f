#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "semion/ensemble.hpp"

namespace semion {

/// Probability that the origin's segment extends l sites left and r sites
/// right at vison density 1/2: 2^-(l+r+2).
double segment_probability(long l, long r);

/// Total probability of l, r <= cutoff, (1 - 2^-(cutoff+1))^2.
double truncated_mass(std::size_t cutoff);

/// Long-time density at offset x: each segment is uniformly occupied. The
/// double sum runs over l, r <= cutoff without renormalization.
double asymptotic_density(long x, std::size_t cutoff);

/// Long-time <x^2> from the double sum over l, r <= cutoff.
double plateau_msd(std::size_t cutoff);

/// Same series summed over n = l + r <= n_max; tends to 2.
double plateau_msd_series(std::size_t n_max);

struct SemiAnalyticOptions {
  std::size_t workers = 0;
  IntegratorOptions integrator{};
};

/// Weighted average over clean segments with l, r <= L/2 of the single-segment
/// dephased evolution, <x^2>(t) = sum P(l, r) <x^2>_{l,r}(t). L must be odd.
std::vector<double> semi_analytic_msd(std::span<const double> times, std::size_t length,
                                      double gamma, double hopping = 1.0,
                                      const SemiAnalyticOptions& options = {});

}  // namespace semion
