#pragma once
// Independent reference implementations used by the unit and acceptance tests.
// None of these call into the library's cost or routing code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "cartroute/geo_graph.hpp"

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Plain adjacency-list graph with explicit costs, indices 0..n-1.
struct Arc {
  int from;
  int to;
  double cost;
};

struct CostGraph {
  int n = 0;
  std::vector<Arc> arcs;
};

inline std::vector<double> dijkstra(const CostGraph& g, int source) {
  std::vector<std::vector<std::pair<int, double>>> adj(g.n);
  for (const auto& a : g.arcs) adj[a.from].push_back({a.to, a.cost});
  std::vector<double> dist(g.n, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[source] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (auto [v, c] : adj[u]) {
      if (d + c < dist[v]) {
        dist[v] = d + c;
        pq.push({dist[v], v});
      }
    }
  }
  return dist;
}

// Textbook |V|-1 rounds of relaxation; nullopt if a further round still improves.
inline std::optional<std::vector<double>> bellman_ford(const CostGraph& g, int source) {
  std::vector<double> dist(g.n, kInf);
  dist[source] = 0.0;
  for (int round = 0; round + 1 < g.n; ++round) {
    bool changed = false;
    for (const auto& a : g.arcs) {
      if (dist[a.from] != kInf && dist[a.from] + a.cost < dist[a.to]) {
        dist[a.to] = dist[a.from] + a.cost;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (const auto& a : g.arcs) {
    if (dist[a.from] != kInf && dist[a.from] + a.cost < dist[a.to]) return std::nullopt;
  }
  return dist;
}

// Build a GeoGraph mirroring a CostGraph: node i gets id i + 1; arc k is edge k
// (assuming no parallel duplicates). Coordinates are arbitrary but valid.
inline cartroute::GeoGraph to_geo(const CostGraph& g) {
  cartroute::GeoGraph out;
  for (int i = 0; i < g.n; ++i) {
    out.add_node({i + 1, 0.001 * (i / 10), 0.001 * (i % 10), std::nullopt});
  }
  for (const auto& a : g.arcs) {
    out.add_edge({a.from + 1, a.to + 1, 1.0, 0.0, cartroute::Surface::kAsphalt, 30.0, false});
  }
  return out;
}

// Random simple digraph without self loops or parallel arcs.
template <typename Rng, typename CostFn>
CostGraph random_graph(Rng& rng, int n, double density, CostFn cost) {
  CostGraph g;
  g.n = n;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && coin(rng) < density) g.arcs.push_back({u, v, cost(rng, u, v)});
    }
  }
  return g;
}

// Work and power brackets evaluated term by term, written out independently.
struct PhysicsTuple {
  double mass, g, fr, theta, rho, cd, area, v, d;
};

inline double work_joules(const PhysicsTuple& p) {
  const double rolling = p.mass * p.g * p.fr * std::cos(p.theta);
  const double gravity = p.mass * p.g * std::sin(p.theta);
  const double drag = 0.5 * p.rho * p.cd * p.area * p.v * p.v;
  return (rolling + gravity + drag) * p.d;
}

inline double power_watts(const PhysicsTuple& p) {
  const double rolling = p.mass * p.g * p.fr * std::cos(p.theta);
  const double gravity = p.mass * p.g * std::sin(p.theta);
  const double drag = 0.5 * p.rho * p.cd * p.area * p.v * p.v;
  return (rolling + gravity + drag) * p.v;
}

// Quadratic uphill, linear downhill, in degrees.
inline double impedance(double theta_rad, double d) {
  const double deg = theta_rad * 57.29577951308232;
  return deg > 0.0 ? deg * deg * d : -deg * d;
}

inline bool close_rel(double a, double b, double rel) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= rel * scale;
}

// Nearest neighbor over a precomputed cost oracle. `pair_cost(from, to, mass)`
// returns the least path cost; the reference scans stops in input order with
// strict `<`, as a plain greedy loop.
template <typename PairCost>
std::vector<std::size_t> reference_nearest_neighbor(int start, const std::vector<int>& stops,
                                                    const std::vector<double>& increments,
                                                    double initial_mass, bool mass_dependent,
                                                    PairCost pair_cost) {
  std::vector<std::size_t> order;
  std::vector<bool> done(stops.size(), false);
  int here = start;
  double mass = initial_mass;
  while (order.size() < stops.size()) {
    double best = kInf;
    std::size_t pick = stops.size();
    for (std::size_t i = 0; i < stops.size(); ++i) {
      if (done[i]) continue;
      const double c = pair_cost(here, stops[i], mass);
      if (c < best) {
        best = c;
        pick = i;
      }
    }
    done[pick] = true;
    order.push_back(pick);
    here = stops[pick];
    if (mass_dependent) mass += increments[pick];
  }
  return order;
}

}  // namespace oracle
