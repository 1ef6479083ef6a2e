#include "cartroute/route_document.hpp"

#include <fstream>
#include <string>

#include "cartroute/error.hpp"

namespace cartroute {

namespace {

using nlohmann::json;

json position(const GeoGraph& graph, NodeId id) {
  const GeoNode& n = graph.node(graph.index_of(id));
  return json::array({n.lon, n.lat});
}

json point_feature(const GeoGraph& graph, const char* role, NodeId node, std::size_t sequence,
                   double mass_increment) {
  return {{"type", "Feature"},
          {"geometry", {{"type", "Point"}, {"coordinates", position(graph, node)}}},
          {"properties",
           {{"role", role},
            {"node_id", node},
            {"sequence", sequence},
            {"mass_increment_kg", mass_increment}}}};
}

}  // namespace

std::vector<Waypoint> StopsRequest::all() const {
  std::vector<Waypoint> out;
  out.reserve(collection.size() + 2);
  out.push_back(start);
  out.insert(out.end(), collection.begin(), collection.end());
  out.push_back(depot);
  return out;
}

StopsRequest stops_from_json(const json& j) {
  if (!j.is_object() || !j.contains("waypoints") || !j["waypoints"].is_array()) {
    throw InvalidArgument("stops: expected an object with a 'waypoints' array");
  }
  StopsRequest req;
  int starts = 0;
  int depots = 0;
  for (const auto& w : j["waypoints"]) {
    if (!w.is_object() || !w.contains("kind") || !w.contains("lat") || !w.contains("lon") ||
        !w["lat"].is_number() || !w["lon"].is_number() || !w["kind"].is_string()) {
      throw InvalidArgument("stops: each waypoint needs kind, lat and lon");
    }
    Waypoint wp;
    wp.lat = w["lat"].get<double>();
    wp.lon = w["lon"].get<double>();
    if (!(wp.lat >= -90.0 && wp.lat <= 90.0) || !(wp.lon >= -180.0 && wp.lon <= 180.0)) {
      throw InvalidArgument("stops: coordinates out of range");
    }
    const auto kind = w["kind"].get<std::string>();
    if (kind == "start") {
      wp.kind = WaypointKind::kStart;
      req.start = wp;
      ++starts;
    } else if (kind == "depot") {
      wp.kind = WaypointKind::kDepot;
      req.depot = wp;
      ++depots;
    } else if (kind == "collection") {
      wp.kind = WaypointKind::kCollection;
      if (w.contains("mass_increment")) {
        if (!w["mass_increment"].is_number()) {
          throw InvalidArgument("stops: mass_increment must be a number");
        }
        wp.mass_increment = w["mass_increment"].get<double>();
      }
      if (!(wp.mass_increment >= 0.0)) throw InvalidArgument("stops: mass_increment must be >= 0");
      req.collection.push_back(wp);
    } else {
      throw InvalidArgument("stops: unknown waypoint kind '" + kind + "'");
    }
  }
  if (starts != 1 || depots != 1) {
    throw InvalidArgument("stops: need exactly one start and one depot");
  }
  return req;
}

StopsRequest load_stops(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open stops file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), ParseError::Location::kByteOffset,
                     static_cast<std::uint64_t>(e.byte));
  }
  return stops_from_json(j);
}

json route_to_geojson(const GeoGraph& graph, const Tour& tour,
                      std::span<const CollectionStop> stops) {
  json features = json::array();
  for (std::size_t k = 0; k < tour.legs.size(); ++k) {
    const PathResult& leg = tour.legs[k];
    json coords = json::array();
    for (NodeId id : leg.nodes) coords.push_back(position(graph, id));
    if (coords.size() == 1) coords.push_back(coords.front());
    features.push_back({{"type", "Feature"},
                        {"geometry", {{"type", "LineString"}, {"coordinates", coords}}},
                        {"properties",
                         {{"leg_index", k},
                          {"policy", std::string(to_string(tour.policy))},
                          {"cost", leg.total_cost},
                          {"distance_m", leg.length()},
                          {"mass_kg", tour.mass_on_leg(k)}}}});
  }

  features.push_back(point_feature(graph, "start", tour.start, 0, 0.0));
  for (std::size_t i = 0; i < tour.visit_order.size(); ++i) {
    const auto& stop = stops[tour.visit_order[i]];
    features.push_back(
        point_feature(graph, "collection", stop.node, i + 1, stop.mass_increment));
  }
  features.push_back(point_feature(graph, "depot", tour.depot, tour.visit_order.size() + 1, 0.0));

  return {{"type", "FeatureCollection"}, {"features", features}};
}

json metrics_to_json(const Tour& tour, const RouteMetrics& metrics) {
  json legs = json::array();
  for (std::size_t k = 0; k < tour.legs.size(); ++k) {
    legs.push_back({{"leg_index", k},
                    {"cost", tour.legs[k].total_cost},
                    {"distance_m", tour.legs[k].length()},
                    {"mass_kg", tour.mass_on_leg(k)}});
  }
  json series = json::array();
  for (const auto& s : metrics.power_series) {
    series.push_back({{"edge_index", s.edge_index},
                      {"leg", s.leg},
                      {"watts", s.watts},
                      {"seconds", s.seconds},
                      {"mass_kg", s.mass}});
  }
  json cdf = json::array();
  for (const auto& p : metrics.cdf) cdf.push_back(json::array({p.watts, p.probability}));

  return {{"policy", std::string(to_string(tour.policy))},
          {"total_distance_m", metrics.total_distance},
          {"total_time_s", metrics.total_time},
          {"mean_power_w", metrics.mean_power},
          {"total_cost", tour.total_cost()},
          {"visit_order", tour.visit_order},
          {"visited_nodes", tour.visited_nodes},
          {"mass_after_each_stop", metrics.mass_schedule},
          {"legs", legs},
          {"power_series", series},
          {"cdf", cdf}};
}

}  // namespace cartroute
