#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cartroute {

using NodeId = std::int64_t;

/// Mean Earth radius (IUGG) used for every great-circle distance.
inline constexpr double kEarthRadiusM = 6371008.8;

/// Great-circle distance in meters between two WGS84 points (degrees).
double haversine_m(double lat1, double lon1, double lat2, double lon2);

enum class Surface : std::uint8_t {
  kAsphalt,
  kConcrete,
  kPavingStones,
  kCobblestone,
  kGravel,
  kDirt,
  kUnknown,
};
inline constexpr std::size_t kSurfaceCount = 7;

/// Canonical lower-case name ("asphalt", "paving_stones", ...).
std::string_view to_string(Surface surface);
/// Inverse of to_string; nullopt for anything else.
std::optional<Surface> surface_from_name(std::string_view name);

struct GeoNode {
  NodeId id = 0;
  double lat = 0.0;
  double lon = 0.0;
  std::optional<double> elevation;

  bool operator==(const GeoNode&) const = default;
};

// theta is the signed grade angle in radians, positive uphill from -> to.
struct GeoEdge {
  NodeId from = 0;
  NodeId to = 0;
  double length = 0.0;
  double theta = 0.0;
  Surface surface = Surface::kUnknown;
  double maxspeed_kmh = 50.0;
  bool oneway_source = false;

  bool operator==(const GeoEdge&) const = default;
};

struct BBox {
  double min_lat = 0.0;
  double max_lat = 0.0;
  double min_lon = 0.0;
  double max_lon = 0.0;

  bool contains(double lat, double lon) const {
    return lat >= min_lat && lat <= max_lat && lon >= min_lon && lon <= max_lon;
  }
  bool operator==(const BBox&) const = default;
};

enum class WaypointKind : std::uint8_t { kStart, kCollection, kDepot };

struct Waypoint {
  double lat = 0.0;
  double lon = 0.0;
  WaypointKind kind = WaypointKind::kCollection;
  double mass_increment = 0.0;  // kg, collection points only

  bool operator==(const Waypoint&) const = default;
};

inline constexpr double kDefaultBoxMarginDeg = 0.01;
inline constexpr double kDefaultBidirectionalSpeedKmh = 40.0;
inline constexpr double kDefaultMaxspeedKmh = 50.0;

/// Box spanning [min - margin, max + margin] on both axes.
/// Throws InvalidArgument on an empty list or a negative margin.
BBox compute_bounding_box(std::span<const Waypoint> waypoints,
                          double margin = kDefaultBoxMarginDeg);

/// Directed street graph. Nodes keep insertion order; edges keep insertion
/// order and are addressed by their position in edges().
class GeoGraph {
 public:
  using Index = std::uint32_t;

  /// Throws InvalidArgument on a duplicate id or out-of-range coordinates.
  Index add_node(const GeoNode& node);

  /// Returns false (and adds nothing) when an identical edge is present.
  /// Throws InvalidArgument on unknown endpoints, length <= 0 or |theta| >= pi/2.
  bool add_edge(const GeoEdge& edge);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  const std::vector<GeoNode>& nodes() const { return nodes_; }
  const std::vector<GeoEdge>& edges() const { return edges_; }
  const GeoNode& node(Index i) const { return nodes_[i]; }
  const GeoEdge& edge(std::size_t e) const { return edges_[e]; }

  std::optional<Index> find(NodeId id) const;
  /// Throws InvalidArgument when the id is absent.
  Index index_of(NodeId id) const;

  std::span<const std::uint32_t> out_edges(Index i) const { return out_[i]; }
  Index source_index(std::size_t e) const { return edge_from_[e]; }
  Index target_index(std::size_t e) const { return edge_to_[e]; }

  bool has_edge(NodeId from, NodeId to) const;

  void set_elevation(Index i, double meters) { nodes_[i].elevation = meters; }
  void set_theta(std::size_t e, double radians);

  /// Field-by-field comparison of nodes and edges in storage order.
  bool operator==(const GeoGraph& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_;
  }

 private:
  std::vector<GeoNode> nodes_;
  std::vector<GeoEdge> edges_;
  std::vector<Index> edge_from_;
  std::vector<Index> edge_to_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::unordered_map<NodeId, Index> index_;
};

/// Adds the reverse of every edge whose maxspeed is at or below the
/// threshold, with the same length/surface/maxspeed and negated theta.
/// Idempotent.
GeoGraph expand_bidirectional(const GeoGraph& graph,
                              double speed_threshold_kmh = kDefaultBidirectionalSpeedKmh);

/// Nearest node by haversine distance; ties go to the smallest node id.
/// Throws InvalidArgument on an empty graph.
NodeId snap_to_node(const GeoGraph& graph, double lat, double lon);
inline NodeId snap_waypoint(const GeoGraph& graph, const Waypoint& wp) {
  return snap_to_node(graph, wp.lat, wp.lon);
}

}  // namespace cartroute
