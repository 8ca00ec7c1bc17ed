#include "nrd/scenario.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace nrd {

using nlohmann::json;

namespace {

EdgeId edge_name(const NodeId& from, const NodeId& to) { return from + "-" + to; }

class Builder {
 public:
  explicit Builder(std::string name) { s_.name = std::move(name); }

  void node(const NodeId& id, Point p) {
    s_.nodes.push_back({id, p});
    positions_.emplace_back(id, p);
  }

  void street(const NodeId& a, const NodeId& b) {
    const Point pa = position(a);
    const Point pb = position(b);
    s_.edges.push_back({edge_name(a, b), a, b, {pa, pb}});
    s_.edges.push_back({edge_name(b, a), b, a, {pb, pa}});
    s_.opposites.emplace_back(edge_name(a, b), edge_name(b, a));
  }

  void sign(SignId id, Point p, SignType type, Bearing azimuth) {
    s_.signs.push_back({std::move(id), p, type, azimuth});
  }

  void bans(const NodeId& from, const NodeId& to) {
    s_.expected.one_way_banned_edges.insert(edge_name(from, to));
  }

  void forbids_turn(const EdgeId& from, const EdgeId& to) {
    s_.expected.turn_restrictions.emplace(from, to);
  }

  void start(const NodeId& from, const NodeId& to) { s_.start_edges.push_back(edge_name(from, to)); }

  Scenario take() { return std::move(s_); }

 private:
  Point position(const NodeId& id) const {
    for (const auto& [n, p] : positions_) {
      if (n == id) {
        return p;
      }
    }
    throw std::logic_error("scenario builder: unknown node " + id);
  }

  Scenario s_;
  std::vector<std::pair<NodeId, Point>> positions_;
};

std::string padded(int value, int width) {
  std::string s = std::to_string(value);
  return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))),
                     '0') +
         s;
}

NodeId grid_node(int col, int row, int width) {
  return "n" + padded(col, width) + "_" + padded(row, width);
}

void add_grid(Builder& b, int columns, int rows, double spacing, int width) {
  for (int c = 0; c < columns; ++c) {
    for (int r = 0; r < rows; ++r) {
      b.node(grid_node(c, r, width), {c * spacing, r * spacing});
    }
  }
  for (int c = 0; c < columns; ++c) {
    for (int r = 0; r < rows; ++r) {
      if (c + 1 < columns) {
        b.street(grid_node(c, r, width), grid_node(c + 1, r, width));
      }
      if (r + 1 < rows) {
        b.street(grid_node(c, r, width), grid_node(c, r + 1, width));
      }
    }
  }
}

json edge_feature(const EdgeSpec& e, const std::optional<EdgeId>& opposite) {
  json coords = json::array();
  for (const Point& p : e.geometry) {
    coords.push_back(json::array({p.x, p.y}));
  }
  json props = {{"edge_id", e.id}, {"source_node", e.source}, {"target_node", e.destination}};
  if (opposite) {
    props["opposite_id"] = *opposite;
  }
  return {{"type", "Feature"},
          {"geometry", {{"type", "LineString"}, {"coordinates", coords}}},
          {"properties", props}};
}

}  // namespace

RoadGraph Scenario::graph() const { return build_graph(nodes, edges, opposites); }

SignInventory Scenario::inventory() const { return SignInventory(signs); }

Scenario grid_scenario(int columns, int rows, double spacing) {
  if (columns < 1 || rows < 1 || columns * rows < 2) {
    throw std::invalid_argument("grid needs at least two intersections");
  }
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw std::invalid_argument("grid spacing must be positive");
  }
  const int width = static_cast<int>(std::to_string(std::max(columns, rows) - 1).size());
  Builder b("grid");
  add_grid(b, columns, rows, spacing, width);
  if (columns > 1) {
    b.start(grid_node(0, 0, width), grid_node(1, 0, width));
  } else {
    b.start(grid_node(0, 0, width), grid_node(0, 1, width));
  }
  return b.take();
}

Scenario dead_end_scenario(double spacing) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw std::invalid_argument("dead-end spacing must be positive");
  }
  Builder b("dead-end");
  b.node("A", {0.0, 0.0});
  b.node("B", {spacing, 0.0});
  b.node("C", {2.0 * spacing, 0.0});
  b.node("D", {spacing, spacing});
  b.street("A", "B");
  b.street("B", "C");
  b.street("B", "D");
  b.start("A", "B");
  return b.take();
}

Scenario twin_nodes_scenario() {
  //   W ---- A -- B ---- E        sign s1 sits between A and B, 5 m north
  //          |    |
  //          C -- D
  Builder b("twin-nodes");
  b.node("A", {0.0, 0.0});
  b.node("B", {20.0, 0.0});
  b.node("W", {-100.0, 0.0});
  b.node("E", {120.0, 0.0});
  b.node("C", {0.0, -100.0});
  b.node("D", {20.0, -100.0});
  b.street("W", "A");
  b.street("A", "B");
  b.street("B", "E");
  b.street("A", "C");
  b.street("B", "D");
  b.street("C", "D");
  b.sign("s1", {8.0, 5.0}, SignType::R101, 0.0);
  b.bans("B", "A");
  b.start("W", "A");
  b.start("E", "B");
  return b.take();
}

Scenario sample_town_scenario() {
  Builder b("sample-town");
  add_grid(b, 3, 3, 100.0, 1);
  // Westbound entry into the middle row's east block is forbidden.
  b.sign("s1", {195.0, 104.0}, SignType::R101, 270.0);
  b.bans("n2_1", "n1_1");
  // Southbound traffic reaching the bottom T must go right (west).
  b.sign("s2", {103.0, -6.0}, SignType::R400a, 180.0);
  b.bans("n1_0", "n2_0");
  b.bans("n1_0", "n1_1");
  // Eastbound on the middle row: no right turn at the centre.
  b.sign("s3", {88.0, 96.0}, SignType::R302, 90.0);
  b.forbids_turn("n0_1-n1_1", "n1_1-n1_0");
  // Southbound on the west column: turn left (east) only.
  b.sign("s4", {-4.0, 112.0}, SignType::R400e, 180.0);
  b.forbids_turn("n0_2-n0_1", "n0_1-n0_0");
  b.forbids_turn("n0_2-n0_1", "n0_1-n0_2");
  // Southbound on the middle column: no left turn at the centre.
  b.sign("s5", {96.0, 112.0}, SignType::R303, 180.0);
  b.forbids_turn("n1_2-n1_1", "n1_1-n2_1");
  b.start("n0_0", "n1_0");
  return b.take();
}

Scenario make_scenario(const std::string& name, const ScenarioParams& params) {
  if (name == "grid") {
    return grid_scenario(params.columns, params.rows, params.spacing);
  }
  if (name == "dead-end") {
    return dead_end_scenario(params.spacing);
  }
  if (name == "twin-nodes") {
    return twin_nodes_scenario();
  }
  if (name == "sample-town") {
    return sample_town_scenario();
  }
  throw std::invalid_argument("unknown scenario template '" + name + "'");
}

json network_geojson(const Scenario& scenario) {
  std::map<EdgeId, EdgeId> opposite;
  for (const auto& [a, b] : scenario.opposites) {
    opposite[a] = b;
    opposite[b] = a;
  }
  json features = json::array();
  for (const auto& n : scenario.nodes) {
    features.push_back({{"type", "Feature"},
                        {"geometry",
                         {{"type", "Point"}, {"coordinates", json::array({n.position.x, n.position.y})}}},
                        {"properties", {{"node_id", n.id}}}});
  }
  for (const auto& e : scenario.edges) {
    const auto it = opposite.find(e.id);
    features.push_back(
        edge_feature(e, it == opposite.end() ? std::nullopt : std::optional<EdgeId>(it->second)));
  }
  return {{"type", "FeatureCollection"}, {"features", features}};
}

json signs_geojson(const Scenario& scenario) {
  json features = json::array();
  for (const auto& s : scenario.signs) {
    features.push_back(
        {{"type", "Feature"},
         {"geometry", {{"type", "Point"}, {"coordinates", json::array({s.position.x, s.position.y})}}},
         {"properties",
          {{"sign_id", s.id}, {"type", std::string(to_code(s.type))}, {"azimuth", s.azimuth}}}});
  }
  return {{"type", "FeatureCollection"}, {"features", features}};
}

json expected_json(const Scenario& scenario) {
  json doc = to_json(scenario.expected);
  doc["start_edges"] = scenario.start_edges;
  return doc;
}

void write_scenario(const Scenario& scenario, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw InputError("cannot create '" + dir.string() + "': " + ec.message());
  }
  write_json(network_geojson(scenario), dir / "network.geojson");
  write_json(signs_geojson(scenario), dir / "signs.geojson");
  write_json(expected_json(scenario), dir / "expected.json");
}

}  // namespace nrd
