#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "semion/classical_walk.hpp"
#include "semion/errors.hpp"

using namespace semion;

TEST(Landscape, ShapeAndValidation) {
  Rng rng(1);
  const auto land = sample_landscape(25, 2.0, 1.0, rng);
  EXPECT_EQ(land.sites(), 25u);
  EXPECT_THROW(sample_landscape(25, -1.0, 1.0, rng), ParameterError);
  EXPECT_THROW(sample_landscape(25, 1.0, 0.0, rng), ParameterError);
  EXPECT_THROW(sample_landscape(1, 1.0, 1.0, rng), ParameterError);
}

TEST(Metropolis, NeverLeavesChain) {
  PinningLandscape land{{0.0, 0.0, 0.0}, 0.0, 1.0, 0};
  Rng rng(2);
  std::size_t pos = 0;
  for (int k = 0; k < 1000; ++k) {
    pos = metropolis_step(land, pos, rng);
    ASSERT_LT(pos, 3u);
  }
}

TEST(Metropolis, TwoSiteBoltzmannRatio) {
  PinningLandscape land{{0.0, 2.0}, 0.0, 1.0, 0};
  Rng rng(3);
  const auto occ = stationary_occupation(land, 0, 2'000'000, rng);
  EXPECT_NEAR(occ[1] / occ[0], std::exp(-2.0), 0.05 * std::exp(-2.0));
}

TEST(Metropolis, DetailedBalanceOnSmallLandscape) {
  Rng lrng(4);
  const auto land = sample_landscape(5, 1.0, 1.0, lrng);
  Rng rng(5);
  const auto occ = stationary_occupation(land, 2, 1'000'000, rng);
  const auto w = boltzmann_weights(land);
  for (std::size_t s = 0; s < 5; ++s) EXPECT_NEAR(occ[s], w[s], 0.02) << "site " << s;
}

TEST(RandomWalk, FreeWalkIsDiffusive) {
  // Wide chain so walls are not felt: t << (L/2)^2.
  const std::vector<double> times{10.0, 30.0, 100.0};
  const auto res = run_rw_ensemble(101, 0.0, 1.0, times, 10000, 6);
  for (std::size_t k = 0; k < times.size(); ++k)
    EXPECT_NEAR(res.msd[k], times[k], 3.0 * res.msd_stderr[k]) << "t=" << times[k];
}

TEST(RandomWalk, FreeWalkEquilibratesUniform) {
  const std::vector<double> times{20000.0};
  const auto res = run_rw_ensemble(25, 0.0, 1.0, times, 4000, 7);
  EXPECT_NEAR(res.msd[0], 52.0, 3.0 * res.msd_stderr[0] + 0.5);
}

TEST(RandomWalk, StrongPinningSuppressesSpread) {
  const std::vector<double> times{100.0};
  const auto free = run_rw_ensemble(25, 0.0, 1.0, times, 2000, 8);
  const auto pinned = run_rw_ensemble(25, 10.0, 1.0, times, 2000, 8);
  EXPECT_LT(pinned.msd[0], 0.2 * free.msd[0]);
}

TEST(RandomWalk, HistogramsNormalized) {
  const std::vector<double> times{0.0, 3.0, 50.0};
  const auto res = run_rw_ensemble(25, 2.0, 1.0, times, 500, 9);
  EXPECT_EQ(res.msd[0], 0.0);
  for (const auto& p : res.profile) {
    double s = 0.0;
    for (double x : p) s += x;
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(RandomWalk, IndependentOfWorkerCount) {
  const std::vector<double> times{5.0, 50.0};
  const auto a = run_rw_ensemble(25, 1.0, 1.0, times, 300, 10, 1);
  const auto b = run_rw_ensemble(25, 1.0, 1.0, times, 300, 10, 4);
  EXPECT_EQ(a.msd, b.msd);
  EXPECT_EQ(a.profile, b.profile);
}
