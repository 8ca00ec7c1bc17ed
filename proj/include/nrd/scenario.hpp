#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "nrd/io.hpp"
#include "nrd/network.hpp"
#include "nrd/sign_inventory.hpp"

namespace nrd {

/// A synthetic network with placed signs and the rules they were placed to
/// express. Expected rules come from the construction, never from the engine.
struct Scenario {
  std::string name;
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  OppositePairs opposites;
  std::vector<Sign> signs;
  GroundTruth expected;
  std::vector<EdgeId> start_edges;

  RoadGraph graph() const;
  SignInventory inventory() const;
};

/// columns x rows intersections, two-way streets between grid neighbours,
/// no signs. Node ids are "n<col>_<row>" (zero padded), edge ids "<from>-<to>".
Scenario grid_scenario(int columns, int rows, double spacing);

/// A T of three dead-end streets meeting at one node.
Scenario dead_end_scenario(double spacing = 100.0);

/// One R-101 close to two nearby intersections; it scores higher from the
/// second one, which holds the real rule.
Scenario twin_nodes_scenario();

/// 3x3 block with a one-way street, a one-way-to-the-right junction, a
/// no-right-turn, a no-left-turn and a mandatory left turn.
Scenario sample_town_scenario();

struct ScenarioParams {
  int columns = 3;
  int rows = 3;
  double spacing = 100.0;
};

/// Templates: "grid", "dead-end", "twin-nodes", "sample-town".
/// Throws std::invalid_argument for unknown templates or bad parameters.
Scenario make_scenario(const std::string& name, const ScenarioParams& params = {});

nlohmann::json network_geojson(const Scenario& scenario);
nlohmann::json signs_geojson(const Scenario& scenario);
/// Ground truth plus the suggested "start_edges".
nlohmann::json expected_json(const Scenario& scenario);

/// Writes network.geojson, signs.geojson and expected.json into `dir`.
void write_scenario(const Scenario& scenario, const std::filesystem::path& dir);

}  // namespace nrd
