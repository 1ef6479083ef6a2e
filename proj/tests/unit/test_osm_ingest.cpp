#include <fstream>
#include <random>
#include <sstream>

#include <fmt/format.h>
#include <gtest/gtest.h>

#include "cartroute/error.hpp"
#include "cartroute/graph_io.hpp"
#include "cartroute/osm_ingest.hpp"

namespace cartroute {
namespace {

const std::string kFixtures = CARTROUTE_FIXTURES;

std::string way_xml(std::int64_t id, std::initializer_list<NodeId> refs,
                    std::initializer_list<std::pair<const char*, const char*>> tags) {
  std::string s = fmt::format("<way id=\"{}\">", id);
  for (auto r : refs) s += fmt::format("<nd ref=\"{}\"/>", r);
  for (auto [k, v] : tags) s += fmt::format("<tag k=\"{}\" v=\"{}\"/>", k, v);
  return s + "</way>";
}

std::string osm(const std::string& body) { return "<osm version=\"0.6\">" + body + "</osm>"; }

const std::string kLine3 =
    "<node id=\"1\" lat=\"0\" lon=\"0\"/><node id=\"2\" lat=\"0\" lon=\"0.001\"/>"
    "<node id=\"3\" lat=\"0\" lon=\"0.002\"/>";

TEST(ParseOsm, SingleNodeNoWays) {
  const auto d = parse_osm(osm("<node id=\"5\" lat=\"1.5\" lon=\"-2\"/>"));
  ASSERT_EQ(d.nodes.size(), 1u);
  EXPECT_EQ(d.nodes[0].id, 5);
  EXPECT_DOUBLE_EQ(d.nodes[0].lat, 1.5);
  EXPECT_TRUE(d.ways.empty());
}

TEST(ParseOsm, WayEchoesRefsAndTags) {
  const auto d = parse_osm(
      osm(kLine3 + way_xml(10, {1, 2, 3}, {{"highway", "residential"}, {"maxspeed", "40"}})));
  ASSERT_EQ(d.ways.size(), 1u);
  EXPECT_EQ(d.ways[0].refs, (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(d.ways[0].tags.at("highway"), "residential");
  EXPECT_EQ(d.ways[0].tags.at("maxspeed"), "40");
}

TEST(ParseOsm, GridFixtureCounts) {
  // Independent count straight from the file text.
  std::ifstream in(kFixtures + "/grid3x3.osm");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
    return n;
  };
  const auto d = parse_osm_file(kFixtures + "/grid3x3.osm");
  EXPECT_EQ(d.nodes.size(), 9u);
  EXPECT_EQ(d.ways.size(), 12u);
  EXPECT_EQ(d.nodes.size(), count("<node "));
  EXPECT_EQ(d.ways.size(), count("<way "));
  EXPECT_EQ(d.dropped_ways, 0u);
}

TEST(ParseOsm, MalformedXmlReportsByteOffset) {
  const std::string bad = "<osm><node id=\"1\" lat=\"0\" lon=\"0\"></osm>";
  try {
    parse_osm(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location_kind(), ParseError::Location::kByteOffset);
    EXPECT_GT(e.location(), 0u);
    EXPECT_LE(e.location(), bad.size());
  }
  EXPECT_THROW(parse_osm(osm("<node id=\"x\" lat=\"0\" lon=\"0\"/>")), ParseError);
}

TEST(ParseOsm, DropsWaysWithMissingNodesOrTooFewRefs) {
  const auto d = parse_osm_file(kFixtures + "/mixed.osm");
  EXPECT_EQ(d.dropped_ways, 2u);
  EXPECT_EQ(d.ways.size(), 4u);
}

TEST(Maxspeed, Dialects) {
  EXPECT_EQ(parse_maxspeed("30"), 30.0);
  EXPECT_EQ(parse_maxspeed("30 km/h"), 30.0);
  EXPECT_EQ(parse_maxspeed("30kmh"), 30.0);
  EXPECT_DOUBLE_EQ(*parse_maxspeed("25 mph"), 25 * 1.609344);
  EXPECT_FALSE(parse_maxspeed("signals"));
  EXPECT_FALSE(parse_maxspeed("BR:urban"));
  EXPECT_FALSE(parse_maxspeed("-10"));
  EXPECT_FALSE(parse_maxspeed("inf"));
  EXPECT_FALSE(parse_maxspeed(""));
}

TEST(Surface, OsmValuesMapToClasses) {
  EXPECT_EQ(parse_surface("asphalt"), Surface::kAsphalt);
  EXPECT_EQ(parse_surface("sett"), Surface::kCobblestone);
  EXPECT_EQ(parse_surface("paving_stones"), Surface::kPavingStones);
  EXPECT_EQ(parse_surface("fine_gravel"), Surface::kGravel);
  EXPECT_EQ(parse_surface("ground"), Surface::kDirt);
  EXPECT_EQ(parse_surface("something_else"), Surface::kUnknown);
}

TEST(BuildGraph, TwoNodeWayLength) {
  const auto d = parse_osm(osm(kLine3 + way_xml(1, {1, 2}, {{"highway", "residential"}})));
  const GeoGraph g = build_graph(d);
  EXPECT_EQ(g.node_count(), 2u);  // node 3 unused
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_NEAR(g.edge(0).length, 111.19508023353292, 1e-9);
  EXPECT_NEAR(g.edge(0).length, 111.20, 0.005);
}

TEST(BuildGraph, MotorwayFiltered) {
  const auto d = parse_osm(osm(kLine3 + way_xml(1, {1, 2}, {{"highway", "motorway"}}) +
                               way_xml(2, {2, 3}, {{"highway", "residential"}})));
  BuildStats stats;
  const GeoGraph g = build_graph(d, {}, &stats);
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(stats.skipped_ways, 1u);
  EXPECT_THROW(build_graph(parse_osm(osm(kLine3 + way_xml(1, {1, 2}, {{"highway", "motorway"}})))),
               ParseError);
}

TEST(BuildGraph, FastOnewayForwardOnlyEvenAfterExpansion) {
  const auto d = parse_osm(osm(
      kLine3 + way_xml(1, {1, 2}, {{"highway", "residential"}, {"oneway", "yes"}, {"maxspeed", "60"}})));
  const GeoGraph g = expand_bidirectional(build_graph(d));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(2, 1));
}

TEST(BuildGraph, OnewayDialects) {
  const auto d = parse_osm(osm(
      kLine3 + way_xml(1, {1, 2}, {{"highway", "residential"}, {"oneway", "-1"}, {"maxspeed", "60"}}) +
      way_xml(2, {2, 3}, {{"highway", "residential"}, {"junction", "roundabout"}, {"maxspeed", "60"}})));
  const GeoGraph g = build_graph(d);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 3));
  EXPECT_FALSE(g.has_edge(3, 2));
  EXPECT_TRUE(g.edge(0).oneway_source);
}

TEST(BuildGraph, UnknownMaxspeedDefaultsToFifty) {
  const auto d = parse_osm(osm(
      kLine3 + way_xml(1, {1, 2}, {{"highway", "residential"}, {"oneway", "yes"}, {"maxspeed", "none"}})));
  const GeoGraph g = expand_bidirectional(build_graph(d));
  EXPECT_EQ(g.edge(0).maxspeed_kmh, 50.0);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(BuildGraph, GridFixtureBidirectionality) {
  const GeoGraph g = expand_bidirectional(build_graph(parse_osm_file(kFixtures + "/grid3x3.osm")));
  EXPECT_EQ(g.node_count(), 9u);
  // 8 ways are two-way or slow (2 edges each), 4 are fast one-way (1 each).
  EXPECT_EQ(g.edge_count(), 20u);
  EXPECT_FALSE(g.has_edge(2, 1));  // 60 km/h oneway
  EXPECT_TRUE(g.has_edge(3, 2));   // 30 km/h oneway, reversed by the rule
  EXPECT_TRUE(g.has_edge(7, 4));   // exactly 40 km/h
  EXPECT_FALSE(g.has_edge(9, 8));  // 25 mph is just over 40 km/h
  EXPECT_TRUE(g.has_edge(8, 7));   // oneway=-1
  EXPECT_FALSE(g.has_edge(7, 8));
}

TEST(BuildGraph, ConservationProperty) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(0, 6), pick(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    std::string body;
    for (int i = 1; i <= 8; ++i) body += fmt::format("<node id=\"{}\" lat=\"{}\" lon=\"0\"/>", i, 0.001 * i);
    std::size_t expected = 0;
    const int ways = 1 + trial % 6;
    for (int w = 0; w < ways; ++w) {
      std::string refs;
      const int k = len(rng);
      for (int r = 0; r < k; ++r) refs += fmt::format("<nd ref=\"{}\"/>", pick(rng));
      body += fmt::format("<way id=\"{}\">{}<tag k=\"highway\" v=\"residential\"/></way>", w, refs);
      if (k >= 2) expected += static_cast<std::size_t>(k - 1);
    }
    const auto d = parse_osm(osm(body));
    EXPECT_EQ(count_candidate_edges(d), expected);
    if (d.ways.empty()) continue;
    BuildStats stats;
    build_graph(d, {}, &stats);
    EXPECT_EQ(stats.candidate_edges, expected);
  }
}

TEST(BuildGraph, SerializeReloadIdentical) {
  const GeoGraph g = expand_bidirectional(build_graph(parse_osm_file(kFixtures + "/mixed.osm")));
  std::stringstream buf;
  write_graph(buf, g);
  EXPECT_EQ(read_graph(buf), g);
}

}  // namespace
}  // namespace cartroute
