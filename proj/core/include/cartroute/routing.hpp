#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cartroute/cost_policies.hpp"
#include "cartroute/geo_graph.hpp"

namespace cartroute {

struct PathResult {
  std::vector<NodeId> nodes;           // source ... target
  std::vector<GeoEdge> edges;          // nodes.size() - 1 entries
  std::vector<double> per_edge_costs;  // parallel to edges
  double total_cost = 0.0;             // left fold of per_edge_costs from 0

  double length() const;
};

using EdgeCostFn = std::function<double(const GeoEdge&)>;

/// Queue-based Bellman-Ford (SPFA) from `source`, returning the cheapest
/// path to `target`. FIFO queue, a node is only enqueued when absent from the
/// queue. A node enqueued more than |V| times aborts with NegativeCycleError.
/// Throws NoPathError when the target is unreachable and InvalidArgument for
/// unknown ids or non-finite costs.
PathResult spfa(const GeoGraph& graph, NodeId source, NodeId target,
                std::span<const double> edge_costs);
PathResult spfa(const GeoGraph& graph, NodeId source, NodeId target, const EdgeCostFn& cost);

/// Per-edge cost vector (indexed like graph.edges()) for a policy and mass.
std::vector<double> edge_costs(const GeoGraph& graph, CostPolicy policy,
                               const PhysicalParams& params, const VehicleState& state);

/// Adds collected mass. Throws InvalidArgument on a negative increment.
VehicleState update_mass(VehicleState state, double increment_kg);

struct CollectionStop {
  NodeId node = 0;
  double mass_increment = 0.0;  // kg
};

struct Tour {
  NodeId start = 0;
  NodeId depot = 0;
  CostPolicy policy = CostPolicy::kDistance;
  double initial_mass = 0.0;
  /// Positions in the request's stop list, in visiting order.
  std::vector<std::size_t> visit_order;
  std::vector<NodeId> visited_nodes;
  /// start -> first stop, ..., last stop -> depot. Always visit_order.size() + 1 legs.
  std::vector<PathResult> legs;
  /// Vehicle mass after each stop, parallel to visit_order.
  std::vector<double> mass_after_each_stop;

  /// Mass carried along leg `i`.
  double mass_on_leg(std::size_t i) const {
    return i == 0 ? initial_mass : mass_after_each_stop[i - 1];
  }
  double total_cost() const;
  double total_length() const;
};

/// Nearest-neighbor ordering over on-demand SPFA costs: from the current
/// node, every unvisited stop is priced with a fresh SPFA run, the strictly
/// cheapest (first in input order on ties) is taken, its mass is added, and
/// under the work policy later costs use the heavier vehicle. A final SPFA
/// leg reaches the depot.
/// Throws NoPathError naming the first unreachable pair.
Tour nearest_neighbor_route(const GeoGraph& graph, NodeId start, NodeId depot,
                            std::span<const CollectionStop> stops, CostPolicy policy,
                            const PhysicalParams& params, double initial_mass);

}  // namespace cartroute
