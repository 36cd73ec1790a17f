#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace semion {

/// Ensemble-averaged spinon dynamics at the requested times.
struct TrajectoryResult {
  std::vector<double> times;
  std::vector<std::vector<double>> profile;         // [time][site], mean |psi(x,t)|^2
  std::vector<std::vector<double>> profile_stderr;  // [time][site]
  std::vector<double> msd;                          // mean <x^2>
  std::vector<double> msd_stderr;
  std::size_t origin = 0;
  std::size_t realizations = 0;  // successful realizations only
  std::size_t failed = 0;
  std::uint64_t seed = 0;

  std::size_t sites() const noexcept { return profile.empty() ? 0 : profile.front().size(); }
};

/// Running sums over realizations. Feeding samples in the same order gives
/// bit-identical results; callers fix the order by realization index.
class TrajectoryAccumulator {
 public:
  TrajectoryAccumulator(std::vector<double> times, std::size_t sites, std::size_t origin);

  /// profiles[k] is the density profile at times[k] for one realization.
  void add(const std::vector<std::vector<double>>& profiles);
  void add_failure() noexcept { ++failed_; }

  std::size_t count() const noexcept { return count_; }
  std::size_t failed() const noexcept { return failed_; }

  TrajectoryResult finish(std::uint64_t seed) const;

 private:
  std::vector<double> times_;
  std::size_t sites_;
  std::size_t origin_;
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<double> sum_msd_, sum_msd_sq_;
  std::vector<std::vector<double>> sum_p_, sum_p_sq_;
  // Sums are of deviations from the first sample, which keeps the variance
  // free of cancellation when samples agree.
  std::vector<double> shift_msd_;
  std::vector<std::vector<double>> shift_p_;
};

/// Throws NumericalError when more than 0.1% of realizations failed.
void check_failure_rate(std::size_t failed, std::size_t total);

/// Validates a snapshot time list: non-empty, non-negative, ascending.
void validate_times(std::span<const double> times);

}  // namespace semion
