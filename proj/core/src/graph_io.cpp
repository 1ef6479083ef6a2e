#include "cartroute/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cartroute/error.hpp"

namespace cartroute {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw ParseError(fmt::format("graph line {}: {}", line_no, msg), ParseError::Location::kLine,
                   line_no);
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line_no, const char* field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(line_no, fmt::format("bad {} '{}'", field, tok));
  }
  return value;
}

}  // namespace

void write_graph(std::ostream& out, const GeoGraph& graph) {
  out << "# cartroute graph v1\n";
  out << fmt::format("# nodes={} edges={}\n", graph.node_count(), graph.edge_count());
  for (const auto& n : graph.nodes()) {
    out << fmt::format("N {} {} {} {}\n", n.id, n.lat, n.lon,
                       n.elevation ? fmt::format("{}", *n.elevation) : std::string("nan"));
  }
  for (const auto& e : graph.edges()) {
    out << fmt::format("E {} {} {} {} {} {} {}\n", e.from, e.to, e.length, e.theta,
                       to_string(e.surface), e.maxspeed_kmh, e.oneway_source ? 1 : 0);
  }
}

void write_graph_file(const std::filesystem::path& path, const GeoGraph& graph) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_graph(out, graph);
  if (!out) throw Error("failed writing " + path.string());
}

GeoGraph read_graph(std::istream& in) {
  GeoGraph graph;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#') continue;

    try {
      if (tok[0] == "N") {
        if (tok.size() != 5) fail(line_no, "node record needs 4 fields");
        GeoNode n;
        n.id = parse_number<NodeId>(tok[1], line_no, "node id");
        n.lat = parse_number<double>(tok[2], line_no, "lat");
        n.lon = parse_number<double>(tok[3], line_no, "lon");
        const double elev = parse_number<double>(tok[4], line_no, "elevation");
        if (!std::isnan(elev)) n.elevation = elev;
        graph.add_node(n);
      } else if (tok[0] == "E") {
        if (tok.size() != 7 && tok.size() != 8) fail(line_no, "edge record needs 6 or 7 fields");
        GeoEdge e;
        e.from = parse_number<NodeId>(tok[1], line_no, "from");
        e.to = parse_number<NodeId>(tok[2], line_no, "to");
        e.length = parse_number<double>(tok[3], line_no, "length");
        e.theta = parse_number<double>(tok[4], line_no, "theta");
        const auto surface = surface_from_name(tok[5]);
        if (!surface) fail(line_no, fmt::format("unknown surface '{}'", tok[5]));
        e.surface = *surface;
        e.maxspeed_kmh = parse_number<double>(tok[6], line_no, "maxspeed");
        if (tok.size() == 8) {
          const int flag = parse_number<int>(tok[7], line_no, "oneway flag");
          if (flag != 0 && flag != 1) fail(line_no, "oneway flag must be 0 or 1");
          e.oneway_source = flag == 1;
        }
        graph.add_edge(e);
      } else {
        fail(line_no, fmt::format("unknown record type '{}'", tok[0]));
      }
    } catch (const InvalidArgument& ex) {
      fail(line_no, ex.what());
    }
  }
  return graph;
}

GeoGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open graph file " + path.string());
  return read_graph(in);
}

}  // namespace cartroute
