#include <benchmark/benchmark.h>

#include "cartroute/evaluator.hpp"
#include "cartroute/routing.hpp"
#include "cartroute/scenario.hpp"

namespace {

using namespace cartroute;

SyntheticTerrain terrain(int size) {
  TerrainOptions o;
  o.center_lat = 0.0;
  o.center_lon = 0.0;
  return generate_synthetic_terrain(TerrainKind::kSinusoidal, size, 60.0, o);
}

void BM_SpfaCornerToCorner(benchmark::State& state) {
  const auto t = terrain(static_cast<int>(state.range(0)));
  const auto costs = edge_costs(t.graph, CostPolicy::kWork, {}, VehicleState{});
  const NodeId last = static_cast<NodeId>(t.graph.node_count());
  for (auto _ : state) benchmark::DoNotOptimize(spfa(t.graph, 1, last, costs));
  state.SetComplexityN(static_cast<std::int64_t>(t.graph.edge_count()));
}
BENCHMARK(BM_SpfaCornerToCorner)->Arg(15)->Arg(30)->Arg(60)->Complexity();

void BM_EdgeCosts(benchmark::State& state) {
  const auto t = terrain(60);
  const auto policy = static_cast<CostPolicy>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(edge_costs(t.graph, policy, {}, VehicleState{}));
}
BENCHMARK(BM_EdgeCosts)->DenseRange(0, 2);

void BM_NearestNeighborRoute(benchmark::State& state) {
  const auto t = terrain(15);
  ScenarioConfig config;
  config.mean_lat = 0.0;
  config.mean_lon = 0.0;
  config.n_points = static_cast<int>(state.range(0));
  const auto waypoints = generate_scenario(config, 1);
  std::vector<CollectionStop> stops;
  for (std::size_t i = 1; i + 1 < waypoints.size(); ++i) {
    stops.push_back({snap_waypoint(t.graph, waypoints[i]), waypoints[i].mass_increment});
  }
  const NodeId start = snap_waypoint(t.graph, waypoints.front());
  const NodeId depot = snap_waypoint(t.graph, waypoints.back());
  for (auto _ : state) {
    const Tour tour =
        nearest_neighbor_route(t.graph, start, depot, stops, CostPolicy::kWork, {}, 110.0);
    benchmark::DoNotOptimize(evaluate_route(tour, {}, 110.0));
  }
}
BENCHMARK(BM_NearestNeighborRoute)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
