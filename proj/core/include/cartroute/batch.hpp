#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cartroute/cost_policies.hpp"
#include "cartroute/evaluator.hpp"
#include "cartroute/geo_graph.hpp"
#include "cartroute/scenario.hpp"

namespace cartroute {

struct BatchRow {
  std::uint64_t seed = 0;
  CostPolicy policy = CostPolicy::kDistance;
  double distance_m = 0.0;
  double time_s = 0.0;
  double mean_power_w = 0.0;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

struct MeanCi {
  double mean = 0.0;
  double half_width = 0.0;  // 95% Student-t; NaN with fewer than two values
};

/// Arithmetic mean and 95% confidence half-width t(0.975, n-1) * s / sqrt(n).
MeanCi mean_ci95(std::span<const double> values);

struct PolicySummary {
  CostPolicy policy = CostPolicy::kDistance;
  std::size_t runs = 0;  // successful
  std::size_t failures = 0;
  MeanCi distance_m;
  MeanCi time_s;
  MeanCi mean_power_w;
};

struct BatchResult {
  std::vector<BatchRow> rows;               // sorted by (seed, policy)
  std::vector<PolicySummary> summary;       // one per requested policy
  std::map<CostPolicy, std::vector<CdfPoint>> cdf;  // pooled over successful runs
};

/// For every seed x policy: generate waypoints, snap them, route, evaluate.
/// Failed runs keep an error message and do not stop the batch.
BatchResult run_batch(const ScenarioConfig& config, const GeoGraph& graph,
                      std::span<const CostPolicy> policies, const PhysicalParams& params,
                      const EvaluationOptions& options = {});

// CSV writers. Numbers use shortest round-trip formatting.
//   metrics.csv: seed,policy,distance_m,time_s,mean_power_w,error
//   summary.csv: policy,runs,failures,mean_distance_m,ci95_distance_m,
//                mean_time_s,ci95_time_s,mean_power_w,ci95_power_w
//   cdf_<policy>.csv: power_w,probability
void write_metrics_csv(std::ostream& out, const BatchResult& result);
void write_summary_csv(std::ostream& out, const BatchResult& result);
void write_cdf_csv(std::ostream& out, std::span<const CdfPoint> cdf);

}  // namespace cartroute
