#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "semion/ensemble.hpp"
#include "semion/errors.hpp"
#include "semion/lindblad.hpp"
#include "semion/vison_dynamics.hpp"

using namespace semion;

TEST(PoissonSchedule, MeanEventCount) {
  double total = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = substream(31, i, StreamPurpose::Events);
    total += static_cast<double>(poisson_event_times(1.0, 100.0, rng).events.size());
  }
  EXPECT_NEAR(total / 1000.0, 100.0, 1.0);
}

TEST(PoissonSchedule, EventsAscendingInsideHorizon) {
  Rng rng(4);
  for (int k = 0; k < 50; ++k) {
    const auto s = poisson_event_times(0.5, 20.0, rng);
    for (std::size_t i = 0; i < s.events.size(); ++i) {
      EXPECT_GE(s.events[i], 0.0);
      EXPECT_LE(s.events[i], 20.0);
      if (i > 0) EXPECT_GT(s.events[i], s.events[i - 1]);
    }
  }
}

TEST(PoissonSchedule, HugeTimescaleGivesNoEvents) {
  std::size_t total = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = substream(1, i, StreamPurpose::Events);
    total += poisson_event_times(1e6, 100.0, rng).events.size();
  }
  EXPECT_LE(total, 1u);
}

TEST(PoissonSchedule, GapsAreExponential) {
  Rng rng(77);
  std::vector<double> gaps;
  while (gaps.size() < 10000) {
    const auto s = poisson_event_times(2.0, 1000.0, rng);
    double prev = 0.0;
    for (double e : s.events) {
      gaps.push_back(e - prev);
      prev = e;
    }
  }
  gaps.resize(10000);
  EXPECT_LT(oracle::ks_statistic(gaps, [](double x) { return 1.0 - std::exp(-x / 2.0); }),
            oracle::ks_critical_1pct(gaps.size()));
}

TEST(PoissonSchedule, RejectsNonPositive) {
  Rng rng(1);
  EXPECT_THROW(poisson_event_times(0.0, 10.0, rng), ParameterError);
  EXPECT_THROW(poisson_event_times(1.0, -1.0, rng), ParameterError);
}

TEST(SiteUpdate, PairCreationHopAndBoundary) {
  EXPECT_EQ(apply_site_update(VisonConfig::from_string("0000"), 2).to_string(), "0110");
  EXPECT_EQ(apply_site_update(VisonConfig::from_string("0100"), 2).to_string(), "0010");
  EXPECT_EQ(apply_site_update(VisonConfig::from_string("0110"), 2).to_string(), "0000");
  EXPECT_EQ(apply_site_update(VisonConfig(25), 0).to_string(), "1" + std::string(23, '0'));
  EXPECT_EQ(apply_site_update(VisonConfig(25), 24).to_string(), std::string(23, '0') + "1");
}

TEST(SiteUpdate, PreservesVisonParity) {
  Rng rng(5);
  auto c = sample_vison_config(25, 0.5, rng);
  std::uniform_int_distribution<std::size_t> pick(1, 23);
  for (int k = 0; k < 200; ++k) {
    const auto before = c.occupied_count() % 2;
    c = apply_site_update(c, pick(rng));
    EXPECT_EQ(c.occupied_count() % 2, before);
  }
}

TEST(Strobo, DensityMatrixInvariantsAcrossUpdates) {
  // Alternate evolution and updates by hand; the state carries over untouched.
  const ChainSpec spec;
  Rng rng(9);
  auto c = sample_vison_config(25, 0.5, rng);
  auto rho = DensityMatrix::localized(25, 12);
  std::uniform_int_distribution<std::size_t> pick(0, 24);
  for (int k = 0; k < 20; ++k) {
    std::vector<double> span{0.7};
    rho = evolve(build_hamiltonian(spec, c), spec.dephasing, rho, span).back();
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-8);
    EXPECT_LT(rho.hermiticity_error(), 1e-12);
    EXPECT_GE(rho.min_eigenvalue(), -1e-9);
    c = apply_site_update(c, pick(rng));
  }
}

TEST(Strobo, StaticLimitEqualsBaseEnsemble) {
  const std::vector<double> times{1.0, 10.0, 100.0};
  const auto strobo = evolve_strobo(ChainSpec{}, 1e6, times, 64, 21);
  const auto base = run_base_ensemble(ChainSpec{}, 0.5, 64, times, 21);
  for (std::size_t k = 0; k < times.size(); ++k) EXPECT_NEAR(strobo.msd[k], base.msd[k], 1e-6);
}

TEST(Strobo, WindowedEqualsFullChain) {
  const std::vector<double> times{5.0, 30.0};
  StroboOptions full;
  full.ensemble.segment_reduction = false;
  const auto a = evolve_strobo(ChainSpec{}, 1.0, times, 6, 3);
  const auto b = evolve_strobo(ChainSpec{}, 1.0, times, 6, 3, full);
  for (std::size_t k = 0; k < times.size(); ++k) {
    EXPECT_NEAR(a.msd[k], b.msd[k], 1e-6);
    for (std::size_t s = 0; s < 25; ++s) EXPECT_NEAR(a.profile[k][s], b.profile[k][s], 1e-7);
  }
}

TEST(Strobo, FastUpdatesDelocalize) {
  const std::vector<double> times{100.0};
  const auto res = evolve_strobo(ChainSpec{}, 0.01, times, 16, 8);
  EXPECT_GT(res.msd[0], 3.0 * 2.0);
}

TEST(Strobo, IndependentOfWorkerCount) {
  const std::vector<double> times{10.0, 50.0};
  StroboOptions one;
  one.ensemble.workers = 1;
  StroboOptions many;
  many.ensemble.workers = 3;
  many.ensemble.chunk = 2;
  const auto a = evolve_strobo(ChainSpec{}, 2.0, times, 7, 13, one);
  const auto b = evolve_strobo(ChainSpec{}, 2.0, times, 7, 13, many);
  EXPECT_EQ(a.msd, b.msd);
  EXPECT_EQ(a.profile, b.profile);
}

TEST(Strobo, RejectsBadParameters) {
  const std::vector<double> times{1.0};
  EXPECT_THROW(evolve_strobo(ChainSpec{}, 0.0, times, 4, 1), ParameterError);
  EXPECT_THROW(evolve_strobo(ChainSpec{}, 1.0, times, 0, 1), ParameterError);
}
