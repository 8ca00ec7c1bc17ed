#include "nrd/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace nrd {

std::optional<NodeIndex> RoadGraph::find_node(const NodeId& id) const {
  const auto it = node_lookup_.find(id);
  if (it == node_lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<EdgeIndex> RoadGraph::find_edge(const EdgeId& id) const {
  const auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

NodeIndex RoadGraph::node_index(const NodeId& id) const {
  if (auto n = find_node(id)) {
    return *n;
  }
  throw GraphError("unknown node '" + id + "'");
}

EdgeIndex RoadGraph::edge_index(const EdgeId& id) const {
  if (auto e = find_edge(id)) {
    return *e;
  }
  throw GraphError("unknown edge '" + id + "'");
}

namespace {

bool is_reverse_of(const DirectedEdge& a, const DirectedEdge& b) {
  return a.source == b.destination && a.destination == b.source &&
         same_shape(a.geometry, b.geometry.reversed(), kEndpointTolerance);
}

}  // namespace

RoadGraph build_graph(std::vector<NodeSpec> nodes, std::vector<EdgeSpec> edges,
                      const std::optional<OppositePairs>& opposite_pairs) {
  std::sort(nodes.begin(), nodes.end(),
            [](const NodeSpec& a, const NodeSpec& b) { return a.id < b.id; });
  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });

  RoadGraph g;
  g.nodes_.reserve(nodes.size());
  for (auto& spec : nodes) {
    if (!std::isfinite(spec.position.x) || !std::isfinite(spec.position.y)) {
      throw GraphError("node '" + spec.id + "' has non-finite coordinates");
    }
    if (!g.node_lookup_.emplace(spec.id, g.nodes_.size()).second) {
      throw GraphError("duplicate node id '" + spec.id + "'");
    }
    g.nodes_.push_back(Node{std::move(spec.id), spec.position, {}});
  }

  g.edges_.reserve(edges.size());
  for (auto& spec : edges) {
    if (g.edge_lookup_.contains(spec.id)) {
      throw GraphError("duplicate edge id '" + spec.id + "'");
    }
    const auto src = g.find_node(spec.source);
    const auto dst = g.find_node(spec.destination);
    if (!src || !dst) {
      throw GraphError("edge '" + spec.id + "' references unknown node '" +
                       (src ? spec.destination : spec.source) + "'");
    }
    std::optional<Polyline> geometry;
    try {
      geometry.emplace(std::move(spec.geometry));
    } catch (const std::invalid_argument& ex) {
      throw GraphError("edge '" + spec.id + "': " + ex.what());
    }
    if (distance(geometry->front(), g.nodes_[*src].position) > kEndpointTolerance ||
        distance(geometry->back(), g.nodes_[*dst].position) > kEndpointTolerance) {
      throw GraphError("edge '" + spec.id + "' geometry does not start at '" + spec.source +
                       "' and end at '" + spec.destination + "'");
    }
    const EdgeIndex index = g.edges_.size();
    g.edge_lookup_.emplace(spec.id, index);
    g.edges_.push_back(DirectedEdge{std::move(spec.id), *src, *dst, std::move(*geometry), {}});
    g.nodes_[*src].outgoing.push_back(index);
  }

  if (opposite_pairs) {
    for (const auto& [a_id, b_id] : *opposite_pairs) {
      const auto a = g.find_edge(a_id);
      const auto b = g.find_edge(b_id);
      if (!a || !b) {
        throw GraphError("opposite pair references unknown edge '" + (a ? b_id : a_id) + "'");
      }
      auto& ea = g.edges_[*a];
      auto& eb = g.edges_[*b];
      if ((ea.opposite && ea.opposite != b) || (eb.opposite && eb.opposite != a)) {
        throw GraphError("edges '" + a_id + "' and '" + b_id + "' have conflicting opposites");
      }
      if (*a == *b || !is_reverse_of(ea, eb)) {
        throw GraphError("edges '" + a_id + "' and '" + b_id +
                         "' are paired as opposites but are not reverses of each other");
      }
      ea.opposite = *b;
      eb.opposite = *a;
    }
  } else {
    // Group by unordered endpoint pair so detection stays near-linear.
    std::map<std::pair<NodeIndex, NodeIndex>, std::vector<EdgeIndex>> by_endpoints;
    for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
      by_endpoints[{g.edges_[e].source, g.edges_[e].destination}].push_back(e);
    }
    auto unique_reverse = [&](EdgeIndex e) -> std::optional<EdgeIndex> {
      const auto& edge = g.edges_[e];
      const auto it = by_endpoints.find({edge.destination, edge.source});
      if (it == by_endpoints.end()) {
        return std::nullopt;
      }
      std::optional<EdgeIndex> found;
      for (EdgeIndex c : it->second) {
        if (c != e && is_reverse_of(edge, g.edges_[c])) {
          if (found) {
            return std::nullopt;
          }
          found = c;
        }
      }
      return found;
    };
    for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
      const auto r = unique_reverse(e);
      if (r && unique_reverse(*r) == e) {
        g.edges_[e].opposite = r;
      }
    }
  }
  return g;
}

}  // namespace nrd
