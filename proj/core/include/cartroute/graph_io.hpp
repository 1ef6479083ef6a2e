#pragma once

#include <filesystem>
#include <iosfwd>

#include "cartroute/geo_graph.hpp"

namespace cartroute {

// Line-delimited graph text format:
//
//   # comment
//   N <id> <lat> <lon> <elevation|nan>
//   E <from> <to> <length_m> <theta_rad> <surface> <maxspeed_kmh> [<oneway 0|1>]
//
// Numbers are written in shortest round-trip form, so write -> read restores
// every field bit for bit. The trailing oneway flag is optional on input
// (defaults to 0) and always written.

void write_graph(std::ostream& out, const GeoGraph& graph);
void write_graph_file(const std::filesystem::path& path, const GeoGraph& graph);

/// Throws ParseError naming the offending line.
GeoGraph read_graph(std::istream& in);
GeoGraph read_graph_file(const std::filesystem::path& path);

}  // namespace cartroute
