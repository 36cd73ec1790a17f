#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "semion/disorder.hpp"
#include "semion/errors.hpp"

using namespace semion;

TEST(Disorder, ZeroWidthIsClean) {
  Rng rng(3);
  const auto d = sample_disorder(25, 0.0, 0.0, rng);
  ASSERT_EQ(d.onsite.size(), 25u);
  ASSERT_EQ(d.bond.size(), 24u);
  for (double w : d.onsite) EXPECT_EQ(w, 0.0);
  for (double w : d.bond) EXPECT_EQ(w, 0.0);
  EXPECT_FALSE(d.has_bond_disorder());
}

TEST(Disorder, NegativeWidthThrows) {
  Rng rng(3);
  EXPECT_THROW(sample_disorder(25, -1.0, 0.0, rng), ParameterError);
  EXPECT_THROW(sample_disorder(25, 0.0, -1.0, rng), ParameterError);
}

TEST(Disorder, SameSeedSameRealization) {
  Rng a(11), b(11);
  const auto x = sample_disorder(25, 1.0, 0.5, a);
  const auto y = sample_disorder(25, 1.0, 0.5, b);
  EXPECT_EQ(x.onsite, y.onsite);
  EXPECT_EQ(x.bond, y.bond);
}

namespace {

// 10^5 onsite and bond draws from consecutive realizations.
void collect(double s0, double s1, std::size_t total, std::vector<double>& on, std::vector<double>& bd) {
  Rng rng(2718);
  while (on.size() < total) {
    const auto d = sample_disorder(101, s0, s1, rng);
    for (std::size_t i = 0; i < d.bond.size() && on.size() < total; ++i) {
      on.push_back(d.onsite[i]);
      bd.push_back(d.bond[i]);
    }
  }
}

}  // namespace

TEST(Disorder, StandardNormalMoments) {
  std::vector<double> on, bd;
  collect(1.0, 1.0, 100000, on, bd);
  EXPECT_LT(std::abs(oracle::mean(on)), 3.0 / std::sqrt(1e5));
  EXPECT_NEAR(oracle::stddev(on), 1.0, 0.02);
  EXPECT_LT(std::abs(oracle::mean(bd)), 3.0 / std::sqrt(1e5));
  EXPECT_NEAR(oracle::stddev(bd), 1.0, 0.02);
}

TEST(Disorder, OnsiteAndBondStreamsUncorrelated) {
  std::vector<double> on, bd;
  collect(1.0, 1.0, 100000, on, bd);
  const double mo = oracle::mean(on), mb = oracle::mean(bd);
  double cov = 0.0;
  for (std::size_t i = 0; i < on.size(); ++i) cov += (on[i] - mo) * (bd[i] - mb);
  cov /= static_cast<double>(on.size());
  const double corr = cov / (oracle::stddev(on) * oracle::stddev(bd));
  EXPECT_LT(std::abs(corr), 3.0 / std::sqrt(1e5));
}

TEST(Disorder, KolmogorovSmirnovAgainstTargetNormal) {
  std::vector<double> on, bd;
  collect(2.0, 0.5, 10000, on, bd);
  EXPECT_LT(oracle::ks_statistic(on, [](double x) { return oracle::normal_cdf(x / 2.0); }),
            oracle::ks_critical_1pct(on.size()));
  EXPECT_LT(oracle::ks_statistic(bd, [](double x) { return oracle::normal_cdf(x / 0.5); }),
            oracle::ks_critical_1pct(bd.size()));
}
