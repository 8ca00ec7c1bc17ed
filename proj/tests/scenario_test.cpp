#include "nrd/scenario.hpp"

#include <gtest/gtest.h>

#include "nrd/detection.hpp"

using namespace nrd;

TEST(Scenario, GridCounts) {
  const auto s = grid_scenario(3, 3, 100.0);
  EXPECT_EQ(s.nodes.size(), 9u);
  EXPECT_EQ(s.edges.size(), 24u);
  EXPECT_TRUE(s.signs.empty());
  EXPECT_TRUE(s.expected.one_way_banned_edges.empty());
  EXPECT_TRUE(s.expected.turn_restrictions.empty());
  EXPECT_EQ(grid_scenario(100, 100, 50.0).edges.size(), 4u * 100u * 99u);
}

TEST(Scenario, GridIdsArePaddedForNaturalOrder) {
  const auto g = grid_scenario(12, 2, 10.0).graph();
  EXPECT_TRUE(g.find_node("n02_01").has_value());
  EXPECT_TRUE(g.find_edge("n09_00-n10_00").has_value());
}

TEST(Scenario, DeadEndHasSingleReturnEdge) {
  const auto g = dead_end_scenario().graph();
  for (const char* end : {"A", "C", "D"}) {
    EXPECT_EQ(g.outgoing_edges(g.node_index(end)).size(), 1u);
  }
}

TEST(Scenario, TwinNodesSignSeenFromBothNodes) {
  const auto s = twin_nodes_scenario();
  const auto g = s.graph();
  const auto inv = s.inventory();
  const DetectionConfig cfg;
  for (const char* n : {"A", "B"}) {
    EXPECT_EQ(detect_signs_from(g.node(g.node_index(n)), inv, cfg).size(), 1u) << n;
  }
  EXPECT_EQ(s.start_edges.size(), 2u);
}

TEST(Scenario, BadParameters) {
  EXPECT_THROW(grid_scenario(1, 1, 10.0), std::invalid_argument);
  EXPECT_THROW(grid_scenario(3, 3, 0.0), std::invalid_argument);
  EXPECT_THROW(dead_end_scenario(-1.0), std::invalid_argument);
  EXPECT_THROW(make_scenario("roundabout"), std::invalid_argument);
}

TEST(Scenario, WritesThreeFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "nrd_scenario_test";
  std::filesystem::remove_all(dir);
  write_scenario(make_scenario("sample-town"), dir);
  for (const char* f : {"network.geojson", "signs.geojson", "expected.json"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  const auto expected = read_json(dir / "expected.json");
  EXPECT_EQ(expected["start_edges"][0], "n0_0-n1_0");
  EXPECT_EQ(parse_truth(expected).one_way_banned_edges.size(), 3u);
}
