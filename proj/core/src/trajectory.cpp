#include "semion/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semion/errors.hpp"
#include "semion/lindblad.hpp"

namespace semion {

TrajectoryAccumulator::TrajectoryAccumulator(std::vector<double> times, std::size_t sites,
                                             std::size_t origin)
    : times_(std::move(times)),
      sites_(sites),
      origin_(origin),
      sum_msd_(times_.size(), 0.0),
      sum_msd_sq_(times_.size(), 0.0),
      sum_p_(times_.size(), std::vector<double>(sites, 0.0)),
      sum_p_sq_(times_.size(), std::vector<double>(sites, 0.0)),
      shift_msd_(times_.size(), 0.0),
      shift_p_(times_.size(), std::vector<double>(sites, 0.0)) {}

void TrajectoryAccumulator::add(const std::vector<std::vector<double>>& profiles) {
  if (profiles.size() != times_.size()) throw ParameterError("profile count does not match times");
  for (std::size_t k = 0; k < times_.size(); ++k) {
    const auto& p = profiles[k];
    if (p.size() != sites_) throw ParameterError("profile length does not match chain");
    const double m = mean_square_displacement(p, origin_);
    if (count_ == 0) {
      shift_msd_[k] = m;
      shift_p_[k] = p;
    }
    const double dm = m - shift_msd_[k];
    sum_msd_[k] += dm;
    sum_msd_sq_[k] += dm * dm;
    for (std::size_t s = 0; s < sites_; ++s) {
      const double dp = p[s] - shift_p_[k][s];
      sum_p_[k][s] += dp;
      sum_p_sq_[k][s] += dp * dp;
    }
  }
  ++count_;
}

namespace {

double stderr_of(double sum, double sum_sq, std::size_t n) {
  if (n < 2) return 0.0;
  const double dn = static_cast<double>(n);
  const double mean = sum / dn;
  const double var = std::max(0.0, (sum_sq - dn * mean * mean) / (dn - 1.0));
  return std::sqrt(var / dn);
}

}  // namespace

TrajectoryResult TrajectoryAccumulator::finish(std::uint64_t seed) const {
  if (count_ == 0) throw NumericalError("no successful realizations to average");
  TrajectoryResult out;
  out.times = times_;
  out.origin = origin_;
  out.realizations = count_;
  out.failed = failed_;
  out.seed = seed;
  const double n = static_cast<double>(count_);
  out.msd.resize(times_.size());
  out.msd_stderr.resize(times_.size());
  out.profile.assign(times_.size(), std::vector<double>(sites_));
  out.profile_stderr.assign(times_.size(), std::vector<double>(sites_));
  for (std::size_t k = 0; k < times_.size(); ++k) {
    out.msd[k] = shift_msd_[k] + sum_msd_[k] / n;
    out.msd_stderr[k] = stderr_of(sum_msd_[k], sum_msd_sq_[k], count_);
    for (std::size_t s = 0; s < sites_; ++s) {
      out.profile[k][s] = shift_p_[k][s] + sum_p_[k][s] / n;
      out.profile_stderr[k][s] = stderr_of(sum_p_[k][s], sum_p_sq_[k][s], count_);
    }
  }
  return out;
}

void check_failure_rate(std::size_t failed, std::size_t total) {
  if (total == 0) return;
  if (static_cast<double>(failed) > 1e-3 * static_cast<double>(total))
    throw NumericalError(std::to_string(failed) + " of " + std::to_string(total) +
                         " realizations failed to integrate (limit 0.1%)");
}

void validate_times(std::span<const double> times) {
  if (times.empty()) throw ParameterError("times must be non-empty");
  if (!(times.front() >= 0.0)) throw ParameterError("times must be >= 0");
  for (std::size_t i = 0; i < times.size(); ++i)
    if (!std::isfinite(times[i])) throw ParameterError("times must be finite");
  if (!std::is_sorted(times.begin(), times.end())) throw ParameterError("times must be ascending");
}

}  // namespace semion
