#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cartroute/cost_policies.hpp"
#include "cartroute/routing.hpp"

namespace cartroute {

struct PowerSample {
  std::size_t edge_index = 0;  // position along the whole tour
  std::size_t leg = 0;
  double watts = 0.0;
  double seconds = 0.0;        // traversal time of the edge
  double mass = 0.0;
};

struct CdfPoint {
  double watts = 0.0;
  double probability = 0.0;

  bool operator==(const CdfPoint&) const = default;
};

struct RouteMetrics {
  double total_distance = 0.0;  // m
  double total_time = 0.0;      // s
  double mean_power = 0.0;      // W, time weighted
  std::vector<PowerSample> power_series;
  std::vector<CdfPoint> cdf;
  std::vector<double> mass_schedule;  // mass after each stop
};

struct EvaluationOptions {
  /// Floor power at zero (no energy recovered downhill).
  bool clamp_power_zero = false;
};

/// Traction force times walking speed, W. Negative downhill.
double instantaneous_power(const GeoEdge& edge, const PhysicalParams& params,
                           const VehicleState& state);

/// Walks the tour at constant walking speed. Throws InvalidArgument when
/// consecutive legs or edges do not connect.
RouteMetrics evaluate_route(const Tour& tour, const PhysicalParams& params, double initial_mass,
                            const EvaluationOptions& options = {});

/// Time-weighted empirical CDF, sorted by power, last probability exactly 1.
/// Equal samples are merged. Empty input gives an empty CDF.
/// Throws InvalidArgument on mismatched lengths or non-positive weights.
std::vector<CdfPoint> empirical_cdf(std::span<const double> samples,
                                    std::span<const double> weights);

}  // namespace cartroute
