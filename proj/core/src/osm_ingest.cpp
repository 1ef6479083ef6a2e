#include "cartroute/osm_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <unordered_map>
#include <unordered_set>

#include <expat.h>
#include <fmt/format.h>

#include "cartroute/error.hpp"

namespace cartroute {

namespace {

constexpr double kKmPerMile = 1.609344;

enum class Element { kNone, kNode, kWay };

struct ParseState {
  XML_Parser parser = nullptr;
  OsmData data;
  Element current = Element::kNone;
  std::unordered_set<NodeId> node_ids;
  std::string error;
  XML_Index error_offset = 0;
};

const char* find_attr(const XML_Char** attrs, const char* name) {
  for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
    if (std::strcmp(attrs[i], name) == 0) return attrs[i + 1];
  }
  return nullptr;
}

template <typename T>
bool parse_attr(const XML_Char** attrs, const char* name, T& out) {
  const char* raw = find_attr(attrs, name);
  if (raw == nullptr) return false;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, out);
  return ec == std::errc{} && ptr == end;
}

void stop_with(ParseState& st, std::string msg) {
  if (st.error.empty()) {
    st.error = std::move(msg);
    st.error_offset = XML_GetCurrentByteIndex(st.parser);
  }
  XML_StopParser(st.parser, XML_FALSE);
}

void XMLCALL on_start(void* user, const XML_Char* name, const XML_Char** attrs) {
  auto& st = *static_cast<ParseState*>(user);
  if (std::strcmp(name, "node") == 0) {
    OsmNode n;
    if (!parse_attr(attrs, "id", n.id) || !parse_attr(attrs, "lat", n.lat) ||
        !parse_attr(attrs, "lon", n.lon)) {
      stop_with(st, "<node> needs numeric id, lat and lon");
      return;
    }
    st.node_ids.insert(n.id);
    st.data.nodes.push_back(std::move(n));
    st.current = Element::kNode;
  } else if (std::strcmp(name, "way") == 0) {
    OsmWay w;
    if (!parse_attr(attrs, "id", w.id)) {
      stop_with(st, "<way> needs a numeric id");
      return;
    }
    st.data.ways.push_back(std::move(w));
    st.current = Element::kWay;
  } else if (std::strcmp(name, "nd") == 0) {
    if (st.current != Element::kWay) return;
    NodeId ref = 0;
    if (!parse_attr(attrs, "ref", ref)) {
      stop_with(st, "<nd> needs a numeric ref");
      return;
    }
    st.data.ways.back().refs.push_back(ref);
  } else if (std::strcmp(name, "tag") == 0) {
    const char* k = find_attr(attrs, "k");
    const char* v = find_attr(attrs, "v");
    if (k == nullptr || v == nullptr) {
      stop_with(st, "<tag> needs k and v");
      return;
    }
    if (st.current == Element::kNode) {
      st.data.nodes.back().tags.insert_or_assign(k, v);
    } else if (st.current == Element::kWay) {
      st.data.ways.back().tags.insert_or_assign(k, v);
    }
  } else if (std::strcmp(name, "relation") == 0) {
    st.current = Element::kNone;
  }
}

void XMLCALL on_end(void* user, const XML_Char* name) {
  auto& st = *static_cast<ParseState*>(user);
  if (std::strcmp(name, "node") == 0 || std::strcmp(name, "way") == 0 ||
      std::strcmp(name, "relation") == 0) {
    st.current = Element::kNone;
  }
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// -1 reverse, 0 two-way, +1 forward only.
int oneway_direction(const OsmTags& tags) {
  if (auto it = tags.find("oneway"); it != tags.end()) {
    const auto v = lower(it->second);
    if (v == "yes" || v == "true" || v == "1") return 1;
    if (v == "-1" || v == "reverse") return -1;
    return 0;
  }
  if (auto it = tags.find("junction"); it != tags.end()) {
    if (it->second == "roundabout" || it->second == "circular") return 1;
  }
  return 0;
}

}  // namespace

OsmData parse_osm(std::string_view xml) {
  ParseState st;
  st.parser = XML_ParserCreate(nullptr);
  if (st.parser == nullptr) throw Error("could not allocate XML parser");

  XML_SetUserData(st.parser, &st);
  XML_SetElementHandler(st.parser, on_start, on_end);

  const char* ptr = xml.data();
  std::size_t left = xml.size();
  XML_Status status = XML_STATUS_OK;
  // XML_Parse takes an int length; feed large inputs in slices.
  constexpr std::size_t kChunk = std::size_t{1} << 30;
  do {
    const std::size_t n = std::min(left, kChunk);
    left -= n;
    status = XML_Parse(st.parser, ptr, static_cast<int>(n), left == 0 ? XML_TRUE : XML_FALSE);
    ptr += n;
  } while (status == XML_STATUS_OK && left > 0);

  if (status != XML_STATUS_OK) {
    std::string msg;
    XML_Index offset = 0;
    if (!st.error.empty()) {
      msg = st.error;
      offset = st.error_offset;
    } else {
      msg = XML_ErrorString(XML_GetErrorCode(st.parser));
      offset = XML_GetCurrentByteIndex(st.parser);
    }
    XML_ParserFree(st.parser);
    const auto at = static_cast<std::uint64_t>(std::max<XML_Index>(offset, 0));
    throw ParseError(fmt::format("malformed OSM XML at byte {}: {}", at, msg),
                     ParseError::Location::kByteOffset, at);
  }
  XML_ParserFree(st.parser);

  auto& ways = st.data.ways;
  const auto kept_end = std::remove_if(ways.begin(), ways.end(), [&](const OsmWay& w) {
    if (w.refs.size() < 2) return true;
    return std::any_of(w.refs.begin(), w.refs.end(),
                       [&](NodeId r) { return st.node_ids.count(r) == 0; });
  });
  st.data.dropped_ways = static_cast<std::size_t>(std::distance(kept_end, ways.end()));
  ways.erase(kept_end, ways.end());
  return std::move(st.data);
}

OsmData parse_osm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open OSM file " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_osm(bytes);
}

std::optional<double> parse_maxspeed(std::string_view value) {
  auto s = trim(value);
  double number = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), number);
  if (ec != std::errc{} || !(number > 0.0) || !std::isfinite(number)) return std::nullopt;

  const auto unit = lower(trim(std::string_view(ptr, s.data() + s.size() - ptr)));
  if (unit.empty() || unit == "km/h" || unit == "kmh" || unit == "kph") return number;
  if (unit == "mph") return number * kKmPerMile;
  return std::nullopt;
}

Surface parse_surface(std::string_view value) {
  const auto v = lower(trim(value));
  if (v == "asphalt" || v == "paved" || v == "chipseal") return Surface::kAsphalt;
  if (v == "concrete" || v.rfind("concrete:", 0) == 0) return Surface::kConcrete;
  if (v == "paving_stones" || v.rfind("paving_stones:", 0) == 0 || v == "bricks") {
    return Surface::kPavingStones;
  }
  if (v == "cobblestone" || v == "sett" || v == "unhewn_cobblestone" ||
      v.rfind("cobblestone:", 0) == 0) {
    return Surface::kCobblestone;
  }
  if (v == "gravel" || v == "fine_gravel" || v == "compacted" || v == "pebblestone") {
    return Surface::kGravel;
  }
  if (v == "dirt" || v == "earth" || v == "ground" || v == "mud" || v == "sand" ||
      v == "unpaved" || v == "grass") {
    return Surface::kDirt;
  }
  return Surface::kUnknown;
}

std::size_t count_candidate_edges(const OsmData& data) {
  std::size_t total = 0;
  for (const auto& w : data.ways) total += w.refs.empty() ? 0 : w.refs.size() - 1;
  return total;
}

GeoGraph build_graph(const OsmData& data, const HighwayProfile& profile, BuildStats* stats) {
  BuildStats local;

  std::vector<const OsmWay*> accepted;
  for (const auto& w : data.ways) {
    const auto hw = w.tags.find("highway");
    if (hw != w.tags.end() && profile.accepted_highways.count(hw->second) > 0) {
      accepted.push_back(&w);
      local.candidate_edges += w.refs.size() - 1;
    } else {
      ++local.skipped_ways;
    }
  }
  local.accepted_ways = accepted.size();
  if (accepted.empty()) throw ParseError("empty graph");

  std::unordered_set<NodeId> used;
  for (const auto* w : accepted) used.insert(w->refs.begin(), w->refs.end());

  GeoGraph graph;
  std::unordered_map<NodeId, const OsmNode*> by_id;
  for (const auto& n : data.nodes) {
    if (used.count(n.id) == 0) continue;
    if (!by_id.emplace(n.id, &n).second) continue;  // repeated node element: first wins
    graph.add_node(GeoNode{n.id, n.lat, n.lon, std::nullopt});
  }

  for (const auto* w : accepted) {
    const int direction = oneway_direction(w->tags);
    const auto surface_tag = w->tags.find("surface");
    const Surface surface =
        surface_tag == w->tags.end() ? Surface::kUnknown : parse_surface(surface_tag->second);
    double maxspeed = profile.default_maxspeed_kmh;
    if (auto ms = w->tags.find("maxspeed"); ms != w->tags.end()) {
      maxspeed = parse_maxspeed(ms->second).value_or(profile.default_maxspeed_kmh);
    }

    for (std::size_t i = 0; i + 1 < w->refs.size(); ++i) {
      const OsmNode& a = *by_id.at(w->refs[i]);
      const OsmNode& b = *by_id.at(w->refs[i + 1]);
      const double length = haversine_m(a.lat, a.lon, b.lat, b.lon);
      if (!(length > 0.0)) {
        ++local.degenerate_segments;
        continue;
      }
      GeoEdge fwd{a.id, b.id, length, 0.0, surface, maxspeed, direction != 0};
      GeoEdge rev{b.id, a.id, length, 0.0, surface, maxspeed, direction != 0};
      if (direction >= 0) graph.add_edge(fwd);
      if (direction <= 0) graph.add_edge(rev);
    }
  }

  if (stats != nullptr) *stats = local;
  return graph;
}

}  // namespace cartroute
