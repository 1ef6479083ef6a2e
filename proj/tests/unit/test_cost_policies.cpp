#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "cartroute/cost_policies.hpp"
#include "cartroute/error.hpp"
#include "cartroute/params_io.hpp"

namespace cartroute {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

PhysicalParams fr_one_percent() {
  PhysicalParams p;
  p.rolling.fill(0.01);
  return p;
}

GeoEdge edge(double length, double theta, Surface s = Surface::kAsphalt) {
  return {1, 2, length, theta, s, 30, false};
}

TEST(Work, FlatWorkedExample) {
  // (110 * 9.80665 * 0.01 + 0.6) * 100, evaluated by hand.
  EXPECT_NEAR(work_cost(edge(100, 0), fr_one_percent(), {110}), 1138.7315, 1e-9);
  EXPECT_NEAR(work_cost(edge(100, 0), fr_one_percent(), {110}), 1138.73, 0.005);
}

TEST(Work, DownhillWorkedExample) {
  const double w = work_cost(edge(100, -0.05), fr_one_percent(), {110});
  EXPECT_NEAR(w, -4254.027057090021, 1e-8);
  EXPECT_LT(w, 0.0);
}

TEST(Work, ZeroDistanceIsZero) {
  GeoEdge e = edge(1, 0.3);
  e.length = 0.0;  // bypasses graph validation on purpose
  EXPECT_EQ(work_cost(e, fr_one_percent(), {500}), 0.0);
}

TEST(Work, MatchesIndependentFormulaProperty) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int i = 0; i < 1000; ++i) {
    oracle::PhysicsTuple t{50 + 300 * unit(rng), 9.7 + 0.2 * unit(rng), 0.001 + 0.05 * unit(rng),
                           (unit(rng) - 0.5) * 0.6,  0.9 + 0.5 * unit(rng), 0.5 + unit(rng),
                           0.3 + unit(rng),          0.2 + 2 * unit(rng),   1 + 300 * unit(rng)};
    PhysicalParams p;
    p.gravity = t.g;
    p.air_density = t.rho;
    p.drag_coefficient = t.cd;
    p.frontal_area = t.area;
    p.walk_speed = t.v;
    p.rolling.fill(t.fr);
    EXPECT_TRUE(oracle::close_rel(work_cost(edge(t.d, t.theta), p, {t.mass}),
                                  oracle::work_joules(t), 1e-9));
  }
}

TEST(Work, MassLinearityProperty) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0, 1);
  const PhysicalParams p;
  for (int i = 0; i < 1000; ++i) {
    const GeoEdge e = edge(1 + 200 * unit(rng), (unit(rng) - 0.5) * 0.5,
                           static_cast<Surface>(static_cast<int>(unit(rng) * kSurfaceCount)));
    const double m1 = 60 + 200 * unit(rng);
    const double m2 = 60 + 200 * unit(rng);
    const double fr = p.rolling_coefficient(e.surface);
    const double expected =
        (m2 - m1) * p.gravity * (fr * std::cos(e.theta) + std::sin(e.theta)) * e.length;
    const double got = work_cost(e, p, {m2}) - work_cost(e, p, {m1});
    EXPECT_NEAR(got, expected, 1e-9 * std::max(1.0, std::abs(work_cost(e, p, {m2}))));
  }
}

TEST(Work, ReverseEdgeAsymmetryProperty) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0, 1);
  const PhysicalParams p;
  for (int i = 0; i < 500; ++i) {
    const double d = 1 + 200 * unit(rng);
    const double theta = (unit(rng) - 0.5) * 0.8;
    const double m = 80 + 100 * unit(rng);
    const double sum = work_cost(edge(d, theta), p, {m}) + work_cost(edge(d, -theta), p, {m});
    const double expected = 2 * d * (m * p.gravity * 0.008 * std::cos(theta) + p.drag_force());
    EXPECT_NEAR(sum, expected, 1e-9 * expected);
    EXPECT_GT(sum, 0.0);
  }
}

TEST(Impedance, WorkedExamples) {
  EXPECT_EQ(impedance_cost(edge(73, 0)), 0.0);
  EXPECT_NEAR(impedance_cost(edge(50, 2 * kDeg)), 200.0, 1e-9);
  EXPECT_NEAR(impedance_cost(edge(50, -2 * kDeg)), 100.0, 1e-9);
}

TEST(Impedance, RadiansSwitch) {
  EXPECT_NEAR(impedance_cost(edge(50, 0.1), AngleUnit::kRadians), 0.01 * 50, 1e-12);
  EXPECT_NEAR(impedance_cost(edge(50, -0.1), AngleUnit::kRadians), 0.1 * 50, 1e-12);
}

TEST(Impedance, NonNegativeAndUphillDominatesAboveOneDegreeProperty) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int i = 0; i < 1000; ++i) {
    const double d = 1 + 100 * unit(rng);
    const double deg = 1.0 + 20 * unit(rng);
    const double up = impedance_cost(edge(d, deg * kDeg));
    const double down = impedance_cost(edge(d, -deg * kDeg));
    EXPECT_GE(up, 0.0);
    EXPECT_GE(down, 0.0);
    EXPECT_GE(up, down);
  }
}

TEST(Distance, Identity) {
  EXPECT_EQ(distance_cost(edge(100, 0.1)), 100.0);
  EXPECT_EQ(distance_cost(edge(0.5, 0)), 0.5);
  EXPECT_EQ(distance_cost(edge(111.19508023353292, 0)), 111.19508023353292);
}

TEST(EdgeCost, Dispatch) {
  const auto p = fr_one_percent();
  EXPECT_EQ(edge_cost(CostPolicy::kDistance, edge(7, 0.2), p, {110}), 7.0);
  EXPECT_EQ(edge_cost(CostPolicy::kImpedance, edge(7, 0), p, {110}), 0.0);
  EXPECT_NEAR(edge_cost(CostPolicy::kWork, edge(100, -0.05), p, {110}), -4254.027057090021, 1e-8);
}

TEST(Work, MonotoneInMassUphillProperty) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0, 1);
  const PhysicalParams p;
  for (int i = 0; i < 500; ++i) {
    const GeoEdge e = edge(1 + 100 * unit(rng), unit(rng) * 0.4);
    const double m = 50 + 100 * unit(rng);
    EXPECT_LT(work_cost(e, p, {m}), work_cost(e, p, {m + 1 + 50 * unit(rng)}));
  }
}

TEST(Policy, NamesRoundTrip) {
  for (auto p : kAllPolicies) EXPECT_EQ(policy_from_name(to_string(p)), p);
  EXPECT_FALSE(policy_from_name("fastest"));
}

TEST(Params, DefaultsValidAndJsonRoundTrip) {
  PhysicalParams p;
  EXPECT_NO_THROW(p.validate());
  EXPECT_DOUBLE_EQ(p.drag_force(), 0.6);
  p.air_density = 1.225;
  p.rolling[static_cast<std::size_t>(Surface::kDirt)] = 0.05;
  p.impedance_angle_unit = AngleUnit::kRadians;
  const PhysicalParams back = params_from_json(params_to_json(p));
  EXPECT_EQ(back.air_density, 1.225);
  EXPECT_EQ(back.rolling, p.rolling);
  EXPECT_EQ(back.impedance_angle_unit, AngleUnit::kRadians);
}

TEST(Params, RejectsBadValues) {
  EXPECT_THROW(params_from_json({{"walk_speed", 0}}), InvalidArgument);
  EXPECT_THROW(params_from_json({{"wind", 3}}), InvalidArgument);
  EXPECT_THROW(params_from_json({{"rolling_resistance", {{"lava", 0.1}}}}), InvalidArgument);
  EXPECT_THROW(params_from_json({{"impedance_angle_unit", "grads"}}), InvalidArgument);
  EXPECT_THROW(params_from_json({{"gravity", "9.8"}}), InvalidArgument);
}

}  // namespace
}  // namespace cartroute
