#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "nrd/network.hpp"
#include "nrd/sign_inventory.hpp"

namespace nrd::testing {

/// Builds a star: a centre node "c" at the origin with one two-way arm per
/// bearing, each `arm` meters long. Arm k ends at node "a<k>"; edges are
/// "c-a<k>" (outbound) and "a<k>-c" (inbound).
inline RoadGraph star(std::initializer_list<double> bearings, double arm = 100.0) {
  std::vector<NodeSpec> nodes{{"c", {0.0, 0.0}}};
  std::vector<EdgeSpec> edges;
  int k = 0;
  for (double b : bearings) {
    const double rad = b * 3.14159265358979323846 / 180.0;
    // cardinal directions stay exact
    double x = arm * std::sin(rad);
    double y = arm * std::cos(rad);
    if (b == 0.0) { x = 0.0; y = arm; }
    if (b == 90.0) { x = arm; y = 0.0; }
    if (b == 180.0) { x = 0.0; y = -arm; }
    if (b == 270.0) { x = -arm; y = 0.0; }
    const std::string id = "a" + std::to_string(k++);
    nodes.push_back({id, {x, y}});
    edges.push_back({"c-" + id, "c", id, {{0.0, 0.0}, {x, y}}});
    edges.push_back({id + "-c", id, "c", {{x, y}, {0.0, 0.0}}});
  }
  return build_graph(std::move(nodes), std::move(edges));
}

inline Sign make_sign(std::string id, Point p, SignType type, double azimuth) {
  return Sign{std::move(id), p, type, azimuth};
}

}  // namespace nrd::testing
