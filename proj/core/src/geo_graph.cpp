#include "cartroute/geo_graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cartroute/error.hpp"

namespace cartroute {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

constexpr std::array<std::string_view, kSurfaceCount> kSurfaceNames = {
    "asphalt", "concrete", "paving_stones", "cobblestone", "gravel", "dirt", "unknown"};

}  // namespace

double haversine_m(double lat1, double lon1, double lat2, double lon2) {
  const double phi1 = lat1 * kDegToRad;
  const double phi2 = lat2 * kDegToRad;
  const double dphi = (lat2 - lat1) * kDegToRad;
  const double dlambda = (lon2 - lon1) * kDegToRad;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlambda / 2.0);
  const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * kEarthRadiusM * std::asin(std::sqrt(std::min(1.0, h)));
}

std::string_view to_string(Surface surface) {
  return kSurfaceNames[static_cast<std::size_t>(surface)];
}

std::optional<Surface> surface_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kSurfaceNames.size(); ++i) {
    if (kSurfaceNames[i] == name) return static_cast<Surface>(i);
  }
  return std::nullopt;
}

BBox compute_bounding_box(std::span<const Waypoint> waypoints, double margin) {
  if (waypoints.empty()) throw InvalidArgument("no waypoints");
  if (!(margin >= 0.0)) throw InvalidArgument("bounding box margin must be >= 0");

  BBox box{waypoints.front().lat, waypoints.front().lat, waypoints.front().lon,
           waypoints.front().lon};
  for (const auto& wp : waypoints) {
    box.min_lat = std::min(box.min_lat, wp.lat);
    box.max_lat = std::max(box.max_lat, wp.lat);
    box.min_lon = std::min(box.min_lon, wp.lon);
    box.max_lon = std::max(box.max_lon, wp.lon);
  }
  box.min_lat -= margin;
  box.max_lat += margin;
  box.min_lon -= margin;
  box.max_lon += margin;
  return box;
}

GeoGraph::Index GeoGraph::add_node(const GeoNode& node) {
  if (!(node.lat >= -90.0 && node.lat <= 90.0) || !(node.lon >= -180.0 && node.lon <= 180.0)) {
    throw InvalidArgument("node " + std::to_string(node.id) + " has out-of-range coordinates");
  }
  if (nodes_.size() >= std::numeric_limits<Index>::max()) {
    throw InvalidArgument("graph node capacity exceeded");
  }
  const auto idx = static_cast<Index>(nodes_.size());
  if (!index_.emplace(node.id, idx).second) {
    throw InvalidArgument("duplicate node id " + std::to_string(node.id));
  }
  nodes_.push_back(node);
  out_.emplace_back();
  return idx;
}

bool GeoGraph::add_edge(const GeoEdge& edge) {
  const auto from = find(edge.from);
  const auto to = find(edge.to);
  if (!from || !to) {
    throw InvalidArgument("edge " + std::to_string(edge.from) + "->" + std::to_string(edge.to) +
                          " references an unknown node");
  }
  if (!(edge.length > 0.0) || !std::isfinite(edge.length)) {
    throw InvalidArgument("edge " + std::to_string(edge.from) + "->" + std::to_string(edge.to) +
                          " must have positive length");
  }
  if (!(std::abs(edge.theta) < std::numbers::pi / 2.0)) {
    throw InvalidArgument("edge grade angle outside (-pi/2, pi/2)");
  }
  for (auto e : out_[*from]) {
    if (edges_[e] == edge) return false;
  }
  const auto e = static_cast<std::uint32_t>(edges_.size());
  edges_.push_back(edge);
  edge_from_.push_back(*from);
  edge_to_.push_back(*to);
  out_[*from].push_back(e);
  return true;
}

std::optional<GeoGraph::Index> GeoGraph::find(NodeId id) const {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  return std::nullopt;
}

GeoGraph::Index GeoGraph::index_of(NodeId id) const {
  if (auto idx = find(id)) return *idx;
  throw InvalidArgument("unknown node id " + std::to_string(id));
}

bool GeoGraph::has_edge(NodeId from, NodeId to) const {
  const auto u = find(from);
  if (!u) return false;
  return std::any_of(out_[*u].begin(), out_[*u].end(),
                     [&](std::uint32_t e) { return edges_[e].to == to; });
}

void GeoGraph::set_theta(std::size_t e, double radians) {
  if (!(std::abs(radians) < std::numbers::pi / 2.0)) {
    throw InvalidArgument("edge grade angle outside (-pi/2, pi/2)");
  }
  edges_[e].theta = radians;
}

GeoGraph expand_bidirectional(const GeoGraph& graph, double speed_threshold_kmh) {
  GeoGraph out = graph;
  // Only the original edges are candidates; reverses added here never need
  // their own reverse since the original already is one.
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const GeoEdge& fwd = graph.edge(e);
    if (fwd.maxspeed_kmh > speed_threshold_kmh) continue;

    const auto v = out.target_index(e);
    const auto outs = out.out_edges(v);
    const bool has_reverse = std::any_of(outs.begin(), outs.end(), [&](std::uint32_t r) {
      const GeoEdge& cand = out.edge(r);
      return cand.to == fwd.from && cand.length == fwd.length;
    });
    if (has_reverse) continue;

    GeoEdge rev = fwd;
    rev.from = fwd.to;
    rev.to = fwd.from;
    rev.theta = -fwd.theta;
    out.add_edge(rev);
  }
  return out;
}

NodeId snap_to_node(const GeoGraph& graph, double lat, double lon) {
  if (graph.empty()) throw InvalidArgument("cannot snap to an empty graph");
  const GeoNode* best = nullptr;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& n : graph.nodes()) {
    const double d = haversine_m(lat, lon, n.lat, n.lon);
    if (d < best_d || (d == best_d && best != nullptr && n.id < best->id)) {
      best = &n;
      best_d = d;
    }
  }
  return best->id;
}

}  // namespace cartroute
