#include "nrd/network.hpp"

#include <gtest/gtest.h>

#include "nrd/scenario.hpp"
#include "test_util.hpp"

using namespace nrd;

namespace {

std::vector<NodeSpec> ab_nodes() { return {{"A", {0, 0}}, {"B", {100, 0}}}; }

EdgeSpec ab() { return {"ab", "A", "B", {{0, 0}, {50, 5}, {100, 0}}}; }
EdgeSpec ba() { return {"ba", "B", "A", {{100, 0}, {50, 5}, {0, 0}}}; }

}  // namespace

TEST(BuildGraph, TwoWayStreetPairsOpposites) {
  const auto g = build_graph(ab_nodes(), {ab(), ba()});
  const auto e = g.edge_index("ab");
  const auto r = g.edge_index("ba");
  EXPECT_EQ(g.opposite_of(e), r);
  EXPECT_EQ(g.opposite_of(r), e);
}

TEST(BuildGraph, OneWayEdgeHasNoOpposite) {
  const auto g = build_graph(ab_nodes(), {ab()});
  EXPECT_FALSE(g.opposite_of(g.edge_index("ab")).has_value());
}

TEST(BuildGraph, AutoDetectionNeedsReversedGeometry) {
  auto other = ba();
  other.geometry = {{100, 0}, {50, -5}, {0, 0}};  // different street, same ends
  const auto g = build_graph(ab_nodes(), {ab(), other});
  EXPECT_FALSE(g.opposite_of(g.edge_index("ab")).has_value());
}

TEST(BuildGraph, AmbiguousReversesStayUnpaired) {
  auto twin = ba();
  twin.id = "ba2";
  const auto g = build_graph(ab_nodes(), {ab(), ba(), twin});
  EXPECT_FALSE(g.opposite_of(g.edge_index("ab")).has_value());
}

TEST(BuildGraph, ExplicitPairs) {
  const auto g = build_graph(ab_nodes(), {ab(), ba()}, OppositePairs{{"ab", "ba"}});
  EXPECT_EQ(g.opposite_of(g.edge_index("ba")), g.edge_index("ab"));
  // explicit mode does not auto-detect
  const auto none = build_graph(ab_nodes(), {ab(), ba()}, OppositePairs{});
  EXPECT_FALSE(none.opposite_of(none.edge_index("ab")).has_value());
}

TEST(BuildGraph, Errors) {
  EXPECT_THROW(build_graph(ab_nodes(), {{"ac", "A", "C", {{0, 0}, {1, 1}}}}), GraphError);
  EXPECT_THROW(build_graph({{"A", {0, 0}}, {"A", {1, 0}}}, {}), GraphError);
  EXPECT_THROW(build_graph(ab_nodes(), {ab(), ab()}), GraphError);
  // geometry must meet the nodes within 1 mm
  EXPECT_THROW(build_graph(ab_nodes(), {{"ab", "A", "B", {{0, 0}, {100, 0.01}}}}), GraphError);
  EXPECT_NO_THROW(build_graph(ab_nodes(), {{"ab", "A", "B", {{0, 0}, {100, 0.0005}}}}));
  // degenerate polyline
  EXPECT_THROW(build_graph(ab_nodes(), {{"ab", "A", "B", {{0, 0}}}}), GraphError);
  // pairing edges that are not reverses
  EXPECT_THROW(build_graph(ab_nodes(), {ab(), {"ab2", "A", "B", {{0, 0}, {100, 0}}}},
                           OppositePairs{{"ab", "ab2"}}),
               GraphError);
  EXPECT_THROW(build_graph(ab_nodes(), {ab(), ba()}, OppositePairs{{"ab", "zz"}}), GraphError);
  // an edge paired with two different opposites
  auto ba2 = ba();
  ba2.id = "ba2";
  EXPECT_THROW(build_graph(ab_nodes(), {ab(), ba(), ba2}, OppositePairs{{"ab", "ba"}, {"ab", "ba2"}}),
               GraphError);
}

TEST(BuildGraph, UnknownIdsThrow) {
  const auto g = build_graph(ab_nodes(), {ab()});
  EXPECT_THROW(g.edge_index("nope"), GraphError);
  EXPECT_THROW(g.node_index("nope"), GraphError);
}

TEST(OutgoingEdges, GridDeadEndAndIsolated) {
  const auto grid = grid_scenario(3, 3, 100.0).graph();
  EXPECT_EQ(grid.outgoing_edges(grid.node_index("n1_1")).size(), 4u);

  const auto dead = dead_end_scenario().graph();
  const auto& from_a = dead.outgoing_edges(dead.node_index("A"));
  ASSERT_EQ(from_a.size(), 1u);
  EXPECT_EQ(dead.edge(from_a[0]).id, "A-B");

  const auto lonely = build_graph({{"A", {0, 0}}, {"B", {100, 0}}, {"Z", {500, 500}}}, {ab()});
  EXPECT_TRUE(lonely.outgoing_edges(lonely.node_index("Z")).empty());
}

TEST(RoadGraph, DeterministicOrderIndependentOfInputOrder) {
  auto s = grid_scenario(4, 3, 50.0);
  const auto g1 = s.graph();
  std::reverse(s.edges.begin(), s.edges.end());
  std::reverse(s.nodes.begin(), s.nodes.end());
  const auto g2 = s.graph();
  ASSERT_EQ(g1.edge_count(), g2.edge_count());
  for (EdgeIndex e = 0; e < g1.edge_count(); ++e) {
    EXPECT_EQ(g1.edge(e).id, g2.edge(e).id);
    EXPECT_EQ(g1.edge(e).opposite, g2.edge(e).opposite);
  }
  for (NodeIndex n = 0; n < g1.node_count(); ++n) {
    EXPECT_EQ(g1.node(n).outgoing, g2.node(n).outgoing);
    EXPECT_TRUE(std::is_sorted(g1.node(n).outgoing.begin(), g1.node(n).outgoing.end()));
  }
}

TEST(RoadGraph, OppositeSymmetryOnGrid) {
  const auto g = grid_scenario(5, 4, 30.0).graph();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto o = g.opposite_of(e);
    ASSERT_TRUE(o.has_value());
    EXPECT_EQ(g.opposite_of(*o), e);
    EXPECT_EQ(g.edge(*o).source, g.edge(e).destination);
  }
}
