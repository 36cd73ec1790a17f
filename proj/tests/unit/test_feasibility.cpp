#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "semion/errors.hpp"
#include "semion/feasibility.hpp"

using namespace semion;

namespace {
EffectiveCouplings hop(double half_gamma) {
  EffectiveCouplings c;
  c.half_gamma = half_gamma;
  c.lambda = 0.67;
  return c;
}
}  // namespace

TEST(RoundSignificant, Basics) {
  EXPECT_DOUBLE_EQ(round_significant(0.1426, 2), 0.14);
  EXPECT_DOUBLE_EQ(round_significant(7.1428, 3), 7.14);
  EXPECT_DOUBLE_EQ(round_significant(1234.0, 2), 1200.0);
  EXPECT_EQ(round_significant(0.0, 2), 0.0);
}

TEST(Feasibility, AnnealerOperatingPoint) {
  const auto r = dwave_feasibility(DeviceParams{}, hop(0.31));
  EXPECT_NEAR(r.half_gamma_ghz, 0.31 * 0.46, 1e-15);
  EXPECT_EQ(r.half_gamma_ghz_quoted, 0.14);
  EXPECT_EQ(r.tau_ns_quoted, 7.14);
  EXPECT_NEAR(r.tau_ns, 1.0 / (0.31 * 0.46), 1e-12);
  EXPECT_NEAR(r.K_physical_ghz, 1.38, 1e-12);
  EXPECT_FALSE(r.thermal.passed);
  EXPECT_LT(r.thermal.margin, 0.0);
  EXPECT_NEAR(r.thermal_deficit_quoted, (0.27 - 0.14) / 0.27, 1e-15);
  EXPECT_TRUE(r.window.passed);
  EXPECT_FALSE(r.feasible);
}

TEST(Feasibility, VerdictIsConjunctionOfChecks) {
  DeviceParams d;
  d.temperature_ghz = 0.01;
  d.control_resolution_ns.reset();
  EXPECT_TRUE(dwave_feasibility(d, hop(0.31)).feasible);
  d.protocol_window_ns = 1.0;
  const auto r = dwave_feasibility(d, hop(0.31));
  EXPECT_FALSE(r.window.passed);
  EXPECT_FALSE(r.feasible);
  d.protocol_window_ns = 1e6;
  d.control_resolution_ns = 1e3;
  const auto s = dwave_feasibility(d, hop(0.31));
  ASSERT_TRUE(s.resolution.has_value());
  EXPECT_FALSE(s.resolution->passed);
  EXPECT_FALSE(s.feasible);
}

TEST(Feasibility, RejectsNonPositiveScales) {
  DeviceParams d;
  d.temperature_ghz = 0.0;
  EXPECT_THROW(dwave_feasibility(d, hop(0.31)), ParameterError);
  EXPECT_THROW(dwave_feasibility(DeviceParams{}, hop(0.0)), ParameterError);
}

TEST(Feasibility, JsonReport) {
  const auto j = nlohmann::json::parse(dwave_feasibility(DeviceParams{}, hop(0.31)).to_json());
  EXPECT_EQ(j.at("verdict"), "infeasible");
  EXPECT_EQ(j.at("tau_ns_quoted").get<double>(), 7.14);
  EXPECT_FALSE(j.at("checks").at("thermal").at("passed").get<bool>());
  EXPECT_TRUE(j.at("checks").contains("resolution"));
}
