#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "semion/ensemble.hpp"
#include "semion/errors.hpp"
#include "semion/segment_analytics.hpp"

using namespace semion;

namespace {

// Truncated double sums over segment extents, written out term by term.
double oracle_density(long x, long cutoff) {
  double s = 0.0;
  for (long l = 0; l <= cutoff; ++l)
    for (long r = 0; r <= cutoff; ++r)
      if (-l <= x && x <= r) s += std::ldexp(1.0, static_cast<int>(-(l + r + 2))) / static_cast<double>(l + r + 1);
  return s;
}

double oracle_plateau(long cutoff) {
  double s = 0.0;
  for (long l = 0; l <= cutoff; ++l)
    for (long r = 0; r <= cutoff; ++r) {
      double sq = 0.0;
      for (long j = -l; j <= r; ++j) sq += static_cast<double>(j * j);
      s += std::ldexp(1.0, static_cast<int>(-(l + r + 2))) * sq / static_cast<double>(l + r + 1);
    }
  return s;
}

}  // namespace

TEST(SegmentProbability, Values) {
  EXPECT_EQ(segment_probability(0, 0), 0.25);
  EXPECT_EQ(segment_probability(1, 2), 1.0 / 32.0);
  EXPECT_THROW(segment_probability(-1, 0), ParameterError);
}

TEST(SegmentProbability, NormalizesAndMatchesTruncatedMass) {
  double s = 0.0;
  for (long l = 0; l <= 30; ++l)
    for (long r = 0; r <= 30; ++r) {
      EXPECT_GE(segment_probability(l, r), 0.0);
      s += segment_probability(l, r);
    }
  EXPECT_NEAR(s, 1.0, 1e-9);
  EXPECT_NEAR(truncated_mass(30), s, 1e-15);
  EXPECT_NEAR(truncated_mass(12), std::pow(1.0 - std::ldexp(1.0, -13), 2), 1e-15);
}

TEST(AsymptoticDensity, CentreAndNeighbours) {
  EXPECT_NEAR(asymptotic_density(0, 60), 0.5, 1e-12);
  EXPECT_NEAR(asymptotic_density(1, 60), (1.0 - std::log(2.0)) / 2.0, 1e-12);
  EXPECT_NEAR(asymptotic_density(-1, 60), (1.0 - std::log(2.0)) / 2.0, 1e-12);
  EXPECT_NEAR((1.0 - std::log(2.0)) / 2.0, 0.15343, 1e-5);
}

TEST(AsymptoticDensity, SymmetricNormalizedAndMatchesOracle) {
  double total = 0.0;
  for (long x = -60; x <= 60; ++x) {
    const double d = asymptotic_density(x, 60);
    EXPECT_GE(d, 0.0);
    EXPECT_EQ(d, asymptotic_density(-x, 60));
    total += d;
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
  for (long x = -12; x <= 12; ++x) EXPECT_NEAR(asymptotic_density(x, 12), oracle_density(x, 12), 1e-15);
  EXPECT_THROW(asymptotic_density(13, 12), ParameterError);
}

TEST(PlateauMsd, ConvergesToTwo) {
  EXPECT_NEAR(plateau_msd(60), 2.0, 1e-6);
  EXPECT_NEAR(plateau_msd_series(200), 2.0, 1e-12);
  EXPECT_NEAR(std::sqrt(plateau_msd(60)), std::sqrt(2.0), 1e-6);
}

TEST(PlateauMsd, MatchesOracleTermByTerm) {
  for (long c : {1L, 2L, 5L, 12L}) EXPECT_NEAR(plateau_msd(static_cast<std::size_t>(c)), oracle_plateau(c), 1e-14);
  // The box l, r <= 1 includes (1, 1); the n = l + r <= 1 series does not.
  EXPECT_NEAR(plateau_msd(1), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(plateau_msd_series(1), 0.125, 1e-15);
  EXPECT_THROW(plateau_msd(0), ParameterError);
}

TEST(SemiAnalytic, StartsAtZeroAndGrowsBeforeFirstReflection) {
  // Underdamped segments overshoot later, so growth is only checked early.
  std::vector<double> times{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto msd = semi_analytic_msd(times, 25, 0.5);
  EXPECT_EQ(msd[0], 0.0);
  for (std::size_t k = 1; k < msd.size(); ++k) EXPECT_GT(msd[k], msd[k - 1]);
}

TEST(SemiAnalytic, LongTimeLimitIsTruncatedPlateau) {
  std::vector<double> times{5000.0};
  EXPECT_NEAR(semi_analytic_msd(times, 25, 0.5)[0], plateau_msd(12), 1e-3);
}

TEST(SemiAnalytic, RejectsEvenLength) {
  std::vector<double> times{1.0};
  EXPECT_THROW(semi_analytic_msd(times, 24, 0.5), ParameterError);
}

TEST(SemiAnalytic, AgreesWithEnsemble) {
  std::vector<double> times{1.0, 100.0};
  const auto msd = semi_analytic_msd(times, 25, 0.5);
  const auto ens = run_base_ensemble(ChainSpec{}, 0.5, 4096, times, 2718);
  for (std::size_t k = 0; k < times.size(); ++k)
    EXPECT_NEAR(msd[k], ens.msd[k], 3.0 * ens.msd_stderr[k]) << "t=" << times[k];
  // Asymptotic density against the t = 100 profile, site by site.
  for (long x = -12; x <= 12; ++x) {
    const auto s = static_cast<std::size_t>(12 + x);
    EXPECT_NEAR(ens.profile[1][s], asymptotic_density(x, 12), 3.0 * ens.profile_stderr[1][s] + 1e-3)
        << "x=" << x;
  }
}
