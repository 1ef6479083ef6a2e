#include "cartroute/batch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <boost/math/distributions/students_t.hpp>
#include <fmt/format.h>

#include "cartroute/error.hpp"
#include "cartroute/routing.hpp"

namespace cartroute {

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' || c == '\r' ? ' ' : c;
  }
  out += '"';
  return out;
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{}", v);
}

BatchRow run_one(const ScenarioConfig& config, const GeoGraph& graph, std::uint64_t seed,
                 const std::vector<Waypoint>& waypoints, CostPolicy policy,
                 const PhysicalParams& params, const EvaluationOptions& options,
                 std::vector<PowerSample>* samples) {
  BatchRow row;
  row.seed = seed;
  row.policy = policy;
  try {
    NodeId start = 0;
    NodeId depot = 0;
    std::vector<CollectionStop> stops;
    for (const auto& wp : waypoints) {
      const NodeId node = snap_waypoint(graph, wp);
      switch (wp.kind) {
        case WaypointKind::kStart:
          start = node;
          break;
        case WaypointKind::kDepot:
          depot = node;
          break;
        case WaypointKind::kCollection:
          stops.push_back({node, wp.mass_increment});
          break;
      }
    }
    const Tour tour = nearest_neighbor_route(graph, start, depot, stops, policy, params,
                                             config.initial_mass);
    RouteMetrics metrics = evaluate_route(tour, params, config.initial_mass, options);
    row.distance_m = metrics.total_distance;
    row.time_s = metrics.total_time;
    row.mean_power_w = metrics.mean_power;
    samples->insert(samples->end(), metrics.power_series.begin(), metrics.power_series.end());
  } catch (const Error& e) {
    row.error = e.what();
    row.distance_m = row.time_s = row.mean_power_w = std::numeric_limits<double>::quiet_NaN();
  }
  return row;
}

}  // namespace

MeanCi mean_ci95(std::span<const double> values) {
  MeanCi out;
  if (values.empty()) {
    out.mean = out.half_width = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const auto n = static_cast<double>(values.size());
  if (std::all_of(values.begin(), values.end(), [&](double v) { return v == values[0]; })) {
    out.mean = values[0];
    out.half_width = values.size() < 2 ? std::numeric_limits<double>::quiet_NaN() : 0.0;
    return out;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / n;
  if (values.size() < 2) {
    out.half_width = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  const boost::math::students_t dist(n - 1.0);
  const double t = boost::math::quantile(boost::math::complement(dist, 0.025));
  out.half_width = t * sd / std::sqrt(n);
  return out;
}

BatchResult run_batch(const ScenarioConfig& config, const GeoGraph& graph,
                      std::span<const CostPolicy> policies, const PhysicalParams& params,
                      const EvaluationOptions& options) {
  config.validate();
  params.validate();
  if (policies.empty()) throw InvalidArgument("run_batch needs at least one policy");

  std::vector<CostPolicy> unique(policies.begin(), policies.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::vector<std::uint64_t> seeds = config.seeds;
  std::sort(seeds.begin(), seeds.end());

  BatchResult result;
  std::map<CostPolicy, std::vector<PowerSample>> pooled;
  for (const auto seed : seeds) {
    // Every policy sees the same stops for a given seed.
    const auto waypoints = generate_scenario(config, seed);
    for (const auto policy : unique) {
      result.rows.push_back(
          run_one(config, graph, seed, waypoints, policy, params, options, &pooled[policy]));
    }
  }

  for (const auto policy : unique) {
    PolicySummary s;
    s.policy = policy;
    std::vector<double> dist, time, power;
    for (const auto& row : result.rows) {
      if (row.policy != policy) continue;
      if (!row.ok()) {
        ++s.failures;
        continue;
      }
      dist.push_back(row.distance_m);
      time.push_back(row.time_s);
      power.push_back(row.mean_power_w);
    }
    s.runs = dist.size();
    s.distance_m = mean_ci95(dist);
    s.time_s = mean_ci95(time);
    s.mean_power_w = mean_ci95(power);
    result.summary.push_back(s);

    std::vector<double> watts, seconds;
    for (const auto& p : pooled[policy]) {
      watts.push_back(p.watts);
      seconds.push_back(p.seconds);
    }
    result.cdf[policy] = empirical_cdf(watts, seconds);
  }
  return result;
}

void write_metrics_csv(std::ostream& out, const BatchResult& result) {
  out << "seed,policy,distance_m,time_s,mean_power_w,error\n";
  for (const auto& r : result.rows) {
    if (r.ok()) {
      out << fmt::format("{},{},{},{},{},\n", r.seed, to_string(r.policy), num(r.distance_m),
                         num(r.time_s), num(r.mean_power_w));
    } else {
      out << fmt::format("{},{},,,,{}\n", r.seed, to_string(r.policy), csv_quote(r.error));
    }
  }
}

void write_summary_csv(std::ostream& out, const BatchResult& result) {
  out << "policy,runs,failures,mean_distance_m,ci95_distance_m,mean_time_s,ci95_time_s,"
         "mean_power_w,ci95_power_w\n";
  for (const auto& s : result.summary) {
    out << fmt::format("{},{},{},{},{},{},{},{},{}\n", to_string(s.policy), s.runs, s.failures,
                       num(s.distance_m.mean), num(s.distance_m.half_width), num(s.time_s.mean),
                       num(s.time_s.half_width), num(s.mean_power_w.mean),
                       num(s.mean_power_w.half_width));
  }
}

void write_cdf_csv(std::ostream& out, std::span<const CdfPoint> cdf) {
  out << "power_w,probability\n";
  for (const auto& p : cdf) out << fmt::format("{},{}\n", num(p.watts), num(p.probability));
}

}  // namespace cartroute
