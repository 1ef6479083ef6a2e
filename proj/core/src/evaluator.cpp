#include "cartroute/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "cartroute/error.hpp"

namespace cartroute {

double instantaneous_power(const GeoEdge& edge, const PhysicalParams& params,
                           const VehicleState& state) {
  return traction_force(edge, params, state) * params.walk_speed;
}

namespace {

void check_continuity(const Tour& tour) {
  if (tour.legs.size() != tour.visit_order.size() + 1 ||
      tour.mass_after_each_stop.size() != tour.visit_order.size()) {
    throw InvalidArgument("tour path discontinuity: leg count does not match the stops");
  }
  NodeId at = tour.start;
  for (std::size_t k = 0; k < tour.legs.size(); ++k) {
    const PathResult& leg = tour.legs[k];
    if (leg.nodes.empty() || leg.nodes.front() != at ||
        leg.edges.size() + 1 != leg.nodes.size()) {
      throw InvalidArgument(fmt::format("tour path discontinuity at the start of leg {}", k));
    }
    for (std::size_t i = 0; i < leg.edges.size(); ++i) {
      if (leg.edges[i].from != leg.nodes[i] || leg.edges[i].to != leg.nodes[i + 1]) {
        throw InvalidArgument(fmt::format("tour path discontinuity in leg {} at edge {}", k, i));
      }
    }
    at = leg.nodes.back();
    const NodeId expected = k < tour.visited_nodes.size() ? tour.visited_nodes[k] : tour.depot;
    if (at != expected) {
      throw InvalidArgument(fmt::format("tour path discontinuity at the end of leg {}", k));
    }
  }
}

}  // namespace

RouteMetrics evaluate_route(const Tour& tour, const PhysicalParams& params, double initial_mass,
                            const EvaluationOptions& options) {
  check_continuity(tour);

  RouteMetrics m;
  // Recorded masses are reused verbatim unless the caller starts heavier or lighter.
  const double shift = initial_mass - tour.initial_mass;
  for (double after : tour.mass_after_each_stop) {
    m.mass_schedule.push_back(shift == 0.0 ? after : after + shift);
  }

  double energy = 0.0;
  std::size_t index = 0;
  for (std::size_t k = 0; k < tour.legs.size(); ++k) {
    const double mass = k == 0 ? initial_mass : m.mass_schedule[k - 1];
    for (const GeoEdge& edge : tour.legs[k].edges) {
      double watts = instantaneous_power(edge, params, VehicleState{mass});
      if (options.clamp_power_zero) watts = std::max(watts, 0.0);
      const double seconds = edge.length / params.walk_speed;
      m.power_series.push_back({index++, k, watts, seconds, mass});
      m.total_distance += edge.length;
      energy += watts * seconds;
    }
  }
  m.total_time = m.total_distance / params.walk_speed;
  if (m.total_time > 0.0) m.mean_power = energy / m.total_time;

  std::vector<double> samples;
  std::vector<double> weights;
  samples.reserve(m.power_series.size());
  weights.reserve(m.power_series.size());
  for (const auto& s : m.power_series) {
    samples.push_back(s.watts);
    weights.push_back(s.seconds);
  }
  m.cdf = empirical_cdf(samples, weights);
  return m;
}

std::vector<CdfPoint> empirical_cdf(std::span<const double> samples,
                                    std::span<const double> weights) {
  if (samples.size() != weights.size()) {
    throw InvalidArgument("empirical_cdf: samples and weights differ in length");
  }
  if (samples.empty()) return {};
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw InvalidArgument("empirical_cdf: weights must be > 0");
  }

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return samples[a] < samples[b]; });

  double total = 0.0;
  for (auto i : order) total += weights[i];

  std::vector<CdfPoint> cdf;
  double running = 0.0;
  for (auto i : order) {
    running += weights[i];
    if (!cdf.empty() && cdf.back().watts == samples[i]) {
      cdf.back().probability = running / total;
    } else {
      cdf.push_back({samples[i], running / total});
    }
  }
  cdf.back().probability = 1.0;
  return cdf;
}

}  // namespace cartroute
