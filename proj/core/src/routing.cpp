#include "cartroute/routing.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "cartroute/error.hpp"

namespace cartroute {

namespace {

constexpr std::uint32_t kNoEdge = std::numeric_limits<std::uint32_t>::max();

}  // namespace

double PathResult::length() const {
  double total = 0.0;
  for (const auto& e : edges) total += e.length;
  return total;
}

PathResult spfa(const GeoGraph& graph, NodeId source, NodeId target,
                std::span<const double> edge_costs) {
  if (edge_costs.size() != graph.edge_count()) {
    throw InvalidArgument("cost vector does not match the edge count");
  }
  for (double c : edge_costs) {
    if (!std::isfinite(c)) throw InvalidArgument("edge costs must be finite");
  }
  const auto s = graph.index_of(source);
  const auto t = graph.index_of(target);
  const std::size_t n = graph.node_count();

  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<std::uint32_t> pred(n, kNoEdge);
  std::vector<char> queued(n, 0);
  std::vector<std::size_t> enqueues(n, 0);
  std::deque<GeoGraph::Index> queue;

  dist[s] = 0.0;
  queue.push_back(s);
  queued[s] = 1;
  enqueues[s] = 1;

  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    queued[u] = 0;
    for (const auto e : graph.out_edges(u)) {
      const auto v = graph.target_index(e);
      const double candidate = dist[u] + edge_costs[e];
      if (candidate < dist[v]) {
        dist[v] = candidate;
        pred[v] = e;
        if (!queued[v]) {
          if (++enqueues[v] > n) {
            // Walk the predecessor chain so the witness sits on the cycle.
            auto w = v;
            for (std::size_t k = 0; k < n && pred[w] != kNoEdge; ++k) {
              w = graph.source_index(pred[w]);
            }
            throw NegativeCycleError(
                fmt::format("negative cycle reachable from node {} (witness node {})", source,
                            graph.node(w).id),
                graph.node(w).id);
          }
          queue.push_back(v);
          queued[v] = 1;
        }
      }
    }
  }

  if (std::isinf(dist[t])) {
    throw NoPathError(fmt::format("no path from node {} to node {}", source, target), source,
                      target);
  }

  std::vector<std::uint32_t> chain;
  for (auto v = t; v != s;) {
    const auto e = pred[v];
    if (e == kNoEdge || chain.size() >= n) throw Error("corrupt predecessor chain");
    chain.push_back(e);
    v = graph.source_index(e);
  }

  PathResult path;
  path.nodes.reserve(chain.size() + 1);
  path.nodes.push_back(source);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const GeoEdge& edge = graph.edge(*it);
    path.edges.push_back(edge);
    path.per_edge_costs.push_back(edge_costs[*it]);
    path.nodes.push_back(edge.to);
  }
  path.total_cost = std::accumulate(path.per_edge_costs.begin(), path.per_edge_costs.end(), 0.0);
  return path;
}

PathResult spfa(const GeoGraph& graph, NodeId source, NodeId target, const EdgeCostFn& cost) {
  std::vector<double> costs(graph.edge_count());
  for (std::size_t e = 0; e < costs.size(); ++e) costs[e] = cost(graph.edge(e));
  return spfa(graph, source, target, costs);
}

std::vector<double> edge_costs(const GeoGraph& graph, CostPolicy policy,
                               const PhysicalParams& params, const VehicleState& state) {
  std::vector<double> costs(graph.edge_count());
  for (std::size_t e = 0; e < costs.size(); ++e) {
    costs[e] = edge_cost(policy, graph.edge(e), params, state);
  }
  return costs;
}

VehicleState update_mass(VehicleState state, double increment_kg) {
  if (!(increment_kg >= 0.0) || !std::isfinite(increment_kg)) {
    throw InvalidArgument("mass increment must be a finite value >= 0");
  }
  state.mass += increment_kg;
  return state;
}

double Tour::total_cost() const {
  double total = 0.0;
  for (const auto& leg : legs) total += leg.total_cost;
  return total;
}

double Tour::total_length() const {
  double total = 0.0;
  for (const auto& leg : legs) total += leg.length();
  return total;
}

Tour nearest_neighbor_route(const GeoGraph& graph, NodeId start, NodeId depot,
                            std::span<const CollectionStop> stops, CostPolicy policy,
                            const PhysicalParams& params, double initial_mass) {
  if (!(initial_mass > 0.0)) throw InvalidArgument("initial mass must be positive");
  graph.index_of(start);
  graph.index_of(depot);
  for (const auto& stop : stops) {
    graph.index_of(stop.node);
    if (!(stop.mass_increment >= 0.0)) throw InvalidArgument("mass increment must be >= 0");
  }

  Tour tour;
  tour.start = start;
  tour.depot = depot;
  tour.policy = policy;
  tour.initial_mass = initial_mass;

  VehicleState vehicle{initial_mass};
  std::vector<bool> visited(stops.size(), false);
  NodeId current = start;
  // Costs only change when the mass does, so one vector serves a whole step.
  std::vector<double> costs = edge_costs(graph, policy, params, vehicle);

  for (std::size_t step = 0; step < stops.size(); ++step) {
    double best_cost = std::numeric_limits<double>::infinity();
    std::size_t best = stops.size();
    PathResult best_path;
    for (std::size_t i = 0; i < stops.size(); ++i) {
      if (visited[i]) continue;
      PathResult candidate = spfa(graph, current, stops[i].node, costs);
      if (candidate.total_cost < best_cost) {
        best_cost = candidate.total_cost;
        best = i;
        best_path = std::move(candidate);
      }
    }

    visited[best] = true;
    tour.visit_order.push_back(best);
    tour.visited_nodes.push_back(stops[best].node);
    tour.legs.push_back(std::move(best_path));
    current = stops[best].node;

    vehicle = update_mass(vehicle, stops[best].mass_increment);
    tour.mass_after_each_stop.push_back(vehicle.mass);
    if (policy == CostPolicy::kWork) costs = edge_costs(graph, policy, params, vehicle);
  }

  tour.legs.push_back(spfa(graph, current, depot, costs));
  return tour;
}

}  // namespace cartroute
