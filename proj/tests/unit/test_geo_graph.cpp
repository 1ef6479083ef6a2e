#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cartroute/error.hpp"
#include "cartroute/geo_graph.hpp"

namespace cartroute {
namespace {

GeoEdge make_edge(NodeId from, NodeId to, double length, double theta, double maxspeed,
                  bool oneway = true) {
  return {from, to, length, theta, Surface::kAsphalt, maxspeed, oneway};
}

GeoGraph two_nodes() {
  GeoGraph g;
  g.add_node({1, 0.0, 0.0, std::nullopt});
  g.add_node({2, 0.0, 0.001, std::nullopt});
  return g;
}

TEST(Haversine, OneThousandthDegreeAtEquator) {
  // 2*pi*R/360 * 0.001 with R = 6371008.8 m.
  EXPECT_NEAR(haversine_m(0, 0, 0, 0.001), 111.19508023353292, 1e-9);
  EXPECT_DOUBLE_EQ(haversine_m(-19.9, -43.9, -19.9, -43.9), 0.0);
  EXPECT_DOUBLE_EQ(haversine_m(1, 2, 3, 4), haversine_m(3, 4, 1, 2));
}

TEST(BoundingBox, SingleWaypointDegenerate) {
  const std::vector<Waypoint> w{{0, 0}};
  EXPECT_EQ(compute_bounding_box(w, 0.0), (BBox{0, 0, 0, 0}));
}

TEST(BoundingBox, MinMaxOfTwo) {
  const std::vector<Waypoint> w{{-19.92, -43.94}, {-19.91, -43.95}};
  EXPECT_EQ(compute_bounding_box(w, 0.0), (BBox{-19.92, -19.91, -43.95, -43.94}));
}

TEST(BoundingBox, MarginAddedOnEverySide) {
  const std::vector<Waypoint> w{{1, 2}, {3, 4}};
  EXPECT_EQ(compute_bounding_box(w, 0.5), (BBox{0.5, 3.5, 1.5, 4.5}));
}

TEST(BoundingBox, RejectsEmptyAndNegativeMargin) {
  EXPECT_THROW(compute_bounding_box({}, 0.0), InvalidArgument);
  const std::vector<Waypoint> w{{1, 2}};
  EXPECT_THROW(compute_bounding_box(w, -0.1), InvalidArgument);
}

TEST(BoundingBox, ContainsEveryWaypointProperty) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lat(-80, 80), lon(-170, 170), margin(0, 0.05);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Waypoint> w(1 + trial % 12);
    for (auto& p : w) p = {lat(rng), lon(rng)};
    const BBox box = compute_bounding_box(w, margin(rng));
    for (const auto& p : w) EXPECT_TRUE(box.contains(p.lat, p.lon));
  }
}

TEST(GeoGraph, RejectsBadInput) {
  GeoGraph g = two_nodes();
  EXPECT_THROW(g.add_node({1, 0, 0, std::nullopt}), InvalidArgument);
  EXPECT_THROW(g.add_node({3, 91, 0, std::nullopt}), InvalidArgument);
  EXPECT_THROW(g.add_edge(make_edge(1, 3, 10, 0, 30)), InvalidArgument);
  EXPECT_THROW(g.add_edge(make_edge(1, 2, 0, 0, 30)), InvalidArgument);
  EXPECT_THROW(g.add_edge(make_edge(1, 2, 10, 1.6, 30)), InvalidArgument);
  EXPECT_THROW(g.index_of(42), InvalidArgument);
}

TEST(GeoGraph, ExactDuplicateEdgeIgnored) {
  GeoGraph g = two_nodes();
  EXPECT_TRUE(g.add_edge(make_edge(1, 2, 10, 0, 30)));
  EXPECT_FALSE(g.add_edge(make_edge(1, 2, 10, 0, 30)));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(2, 1));
}

TEST(ExpandBidirectional, SlowEdgeGetsNegatedReverse) {
  GeoGraph g = two_nodes();
  g.add_edge(make_edge(1, 2, 111.2, 0.02, 40));
  const GeoGraph out = expand_bidirectional(g, 40);
  ASSERT_EQ(out.edge_count(), 2u);
  const GeoEdge& rev = out.edge(1);
  EXPECT_EQ(rev.from, 2);
  EXPECT_EQ(rev.to, 1);
  EXPECT_EQ(rev.theta, -0.02);
  EXPECT_EQ(rev.length, 111.2);
}

TEST(ExpandBidirectional, FastOnewayStaysOneway) {
  GeoGraph g = two_nodes();
  g.add_edge(make_edge(1, 2, 111.2, 0.0, 60));
  EXPECT_EQ(expand_bidirectional(g, 40).edge_count(), 1u);
}

TEST(ExpandBidirectional, EmptyGraphIdentity) {
  EXPECT_EQ(expand_bidirectional(GeoGraph{}, 40), GeoGraph{});
}

// Random graphs for the structural properties below.
GeoGraph random_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(2, 25);
  std::uniform_real_distribution<double> unit(0, 1);
  const int n = count(rng);
  GeoGraph g;
  for (int i = 1; i <= n; ++i) g.add_node({i, unit(rng) * 0.01, unit(rng) * 0.01, std::nullopt});
  const double speeds[] = {20, 30, 40, 50, 60, 80};
  for (int k = 0; k < 3 * n; ++k) {
    const NodeId a = 1 + static_cast<NodeId>(unit(rng) * n);
    const NodeId b = 1 + static_cast<NodeId>(unit(rng) * n);
    if (a == b) continue;
    g.add_edge(make_edge(a, b, 10 + 200 * unit(rng), (unit(rng) - 0.5) * 0.3,
                         speeds[static_cast<int>(unit(rng) * 6)]));
  }
  return g;
}

TEST(ExpandBidirectional, AntisymmetryProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const GeoGraph g = expand_bidirectional(random_graph(rng), 40);
    for (const auto& e : g.edges()) {
      if (e.maxspeed_kmh > 40) continue;
      bool found = false;
      for (const auto& r : g.edges()) {
        if (r.from == e.to && r.to == e.from && r.length == e.length) {
          EXPECT_EQ(r.theta, -e.theta);
          found = true;
        }
      }
      EXPECT_TRUE(found) << e.from << "->" << e.to;
    }
  }
}

TEST(ExpandBidirectional, IdempotentProperty) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const GeoGraph once = expand_bidirectional(random_graph(rng), 40);
    EXPECT_EQ(expand_bidirectional(once, 40), once);
  }
}

TEST(ExpandBidirectional, FastEdgesUntouchedProperty) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const GeoGraph g = random_graph(rng);
    const GeoGraph out = expand_bidirectional(g, 40);
    std::size_t slow = 0;
    for (const auto& e : g.edges()) slow += e.maxspeed_kmh <= 40 ? 1 : 0;
    EXPECT_LE(out.edge_count(), g.edge_count() + slow);
    for (std::size_t e = 0; e < g.edge_count(); ++e) EXPECT_EQ(out.edge(e), g.edge(e));
  }
}

TEST(Snap, ExactCoordinatesReturnThatNode) {
  GeoGraph g = two_nodes();
  EXPECT_EQ(snap_to_node(g, 0.0, 0.001), 2);
}

TEST(Snap, TieGoesToSmallerId) {
  GeoGraph g;
  g.add_node({9, 0.0, 0.001, std::nullopt});
  g.add_node({5, 0.0, -0.001, std::nullopt});
  EXPECT_EQ(snap_to_node(g, 0.0, 0.0), 5);
}

TEST(Snap, NearOriginPicksOrigin) {
  GeoGraph g;
  g.add_node({1, 0, 0, std::nullopt});
  g.add_node({2, 1, 1, std::nullopt});
  EXPECT_EQ(snap_waypoint(g, Waypoint{0.001, 0}), 1);
}

TEST(Snap, EmptyGraphThrows) { EXPECT_THROW(snap_to_node(GeoGraph{}, 0, 0), InvalidArgument); }

TEST(Snap, MatchesExhaustiveScanProperty) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const GeoGraph g = random_graph(rng);
    const double lat = unit(rng) * 0.012 - 0.001;
    const double lon = unit(rng) * 0.012 - 0.001;
    double best = 1e300;
    for (const auto& n : g.nodes()) best = std::min(best, haversine_m(lat, lon, n.lat, n.lon));
    const GeoNode& got = g.node(g.index_of(snap_to_node(g, lat, lon)));
    EXPECT_EQ(haversine_m(lat, lon, got.lat, got.lon), best);
  }
}

TEST(Surface, NamesRoundTrip) {
  for (std::size_t i = 0; i < kSurfaceCount; ++i) {
    const auto s = static_cast<Surface>(i);
    EXPECT_EQ(surface_from_name(to_string(s)), s);
  }
  EXPECT_FALSE(surface_from_name("lava").has_value());
}

}  // namespace
}  // namespace cartroute
