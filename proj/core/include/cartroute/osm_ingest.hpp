#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cartroute/geo_graph.hpp"

namespace cartroute {

using OsmTags = std::map<std::string, std::string, std::less<>>;

struct OsmNode {
  NodeId id = 0;
  double lat = 0.0;
  double lon = 0.0;
  OsmTags tags;
};

struct OsmWay {
  std::int64_t id = 0;
  std::vector<NodeId> refs;
  OsmTags tags;
};

struct OsmData {
  std::vector<OsmNode> nodes;
  std::vector<OsmWay> ways;
  /// Ways discarded for referencing absent nodes or having < 2 refs.
  std::size_t dropped_ways = 0;
};

/// Parses OSM XML. Relations and unknown elements are ignored; all tags are
/// kept. Throws ParseError carrying the byte offset of malformed input.
OsmData parse_osm(std::string_view xml);
OsmData parse_osm_file(const std::filesystem::path& path);

/// Which ways become streets, and how to fill in missing attributes.
struct HighwayProfile {
  std::set<std::string, std::less<>> accepted_highways = {
      "residential", "tertiary", "secondary", "primary",  "living_street",
      "service",     "unclassified", "footway", "path"};
  double default_maxspeed_kmh = kDefaultMaxspeedKmh;
};

/// "40", "40 km/h", "40kmh" -> 40; "25 mph" -> 40.2336; anything else -> nullopt.
std::optional<double> parse_maxspeed(std::string_view value);

/// Maps an OSM `surface` value onto the coarse rolling-resistance classes.
Surface parse_surface(std::string_view value);

/// Sum over ways of (ref count - 1).
std::size_t count_candidate_edges(const OsmData& data);

struct BuildStats {
  std::size_t accepted_ways = 0;
  std::size_t skipped_ways = 0;
  std::size_t candidate_edges = 0;       // over accepted ways
  std::size_t degenerate_segments = 0;   // zero-length pairs, not turned into edges
};

/// One edge per consecutive ref pair of each accepted way, plus the reverse
/// direction unless the way is one-way. Only nodes used by accepted ways are
/// kept. Elevations are left unset and grades at zero.
/// Throws ParseError("empty graph") when no way is accepted.
GeoGraph build_graph(const OsmData& data, const HighwayProfile& profile = {},
                     BuildStats* stats = nullptr);

}  // namespace cartroute
