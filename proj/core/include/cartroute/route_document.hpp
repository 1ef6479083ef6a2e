#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "cartroute/evaluator.hpp"
#include "cartroute/geo_graph.hpp"
#include "cartroute/routing.hpp"

namespace cartroute {

/// A planning request: exactly one start, any number of collection points,
/// exactly one depot.
struct StopsRequest {
  Waypoint start;
  std::vector<Waypoint> collection;
  Waypoint depot;

  std::vector<Waypoint> all() const;
};

// {"waypoints": [{"kind": "start"|"collection"|"depot", "lat": .., "lon": ..,
//                 "mass_increment": kg (collection only, default 0)}, ...]}
StopsRequest stops_from_json(const nlohmann::json& j);
StopsRequest load_stops(const std::filesystem::path& path);

/// FeatureCollection: one LineString per leg with properties
/// {leg_index, policy, cost, distance_m, mass_kg}, then one Point per stop with
/// {role, node_id, sequence, mass_increment_kg}. Coordinates are [lon, lat] of
/// graph nodes; a zero-length leg repeats its single position.
nlohmann::json route_to_geojson(const GeoGraph& graph, const Tour& tour,
                                std::span<const CollectionStop> stops);

nlohmann::json metrics_to_json(const Tour& tour, const RouteMetrics& metrics);

}  // namespace cartroute
